//! Verification suites: build each instance, run the matching construction,
//! certify it, compare with the closed form and optionally with the exact
//! solver.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::addressing::{format_vertex, Family, FamilyVertex};
use crate::error::{Error, Result};
use crate::exact_fvs::{tau_bnb, BnbOptions, DEFAULT_BUDGET};
use crate::generators::{expected_order, expected_size, generate};
use crate::graph::LabeledGraph;
use crate::pairable::{fvs_sierpinski, forest_plus, forest_plusplus};
use crate::triangle_forest::{a_set, b_star, f_small_triangle, predicted_f_lower, predicted_tau_p3};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Suite {
    #[serde(rename = "counts")]
    Counts,
    #[serde(rename = "sierpinski")]
    Sierpinski,
    #[serde(rename = "plus")]
    Plus,
    #[serde(rename = "plusplus")]
    PlusPlus,
    #[serde(rename = "triangle-p3")]
    TriangleP3,
    #[serde(rename = "triangle-bound")]
    TriangleLower,
    #[serde(rename = "conjecture")]
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Counts,
        Suite::Sierpinski,
        Suite::Plus,
        Suite::PlusPlus,
        Suite::TriangleP3,
        Suite::TriangleLower,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Sierpinski => "sierpinski",
            Suite::Plus => "plus",
            Suite::PlusPlus => "plusplus",
            Suite::TriangleP3 => "triangle-p3",
            Suite::TriangleLower => "triangle-bound",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    BoundOnly,
    Mismatch,
}

impl Status {
    fn symbol(self) -> &'static str {
        match self {
            Status::Match => "✓",
            Status::BoundOnly => "~",
            Status::Mismatch => "✗",
        }
    }
}

/// What the three numbers of a report measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Order,
    Size,
    /// Feedback vertex number.
    Tau,
    /// Largest induced forest.
    F,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: Suite,
    pub family: Family,
    pub p: u32,
    pub n: usize,
    pub quantity: Quantity,
    pub predicted: u64,
    pub constructed: u64,
    pub exact: Option<u64>,
    /// Best value the solver certified, also when it ran out of budget.
    #[serde(default)]
    pub best_found: Option<u64>,
    pub status: Status,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranges {
    pub p: Vec<u32>,
    pub n: Vec<usize>,
    /// Only consulted by the counts suite.
    pub families: Vec<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub exact: bool,
    pub budget: u64,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exact: false,
            budget: DEFAULT_BUDGET,
            jobs: 0,
        }
    }
}

/// Parses `"3"`, `"2..5"` (inclusive) or `"2,4,7"`.
pub fn parse_range(text: &str) -> Result<Vec<u64>> {
    let bad = || Error::Unsupported(format!("bad range {text:?}"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u64 = hi.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
        return Ok((lo..=hi).collect());
    }
    let mut out: Vec<u64> = text
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

struct Job {
    family: Family,
    p: u32,
    n: usize,
}

/// Runs `suite` over every `(p, n)` in `ranges` (and every family, for
/// counts). Reports come back sorted by `(family, p, n, quantity)`.
pub fn verify(suite: Suite, ranges: &Ranges, options: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let families = match suite {
        Suite::Counts => ranges.families.clone(),
        Suite::Sierpinski => vec![Family::S],
        Suite::Plus => vec![Family::Plus],
        Suite::PlusPlus => vec![Family::PlusPlus],
        _ => vec![Family::Hat],
    };
    let mut jobs = Vec::new();
    for &family in &families {
        for &p in &ranges.p {
            for &n in &ranges.n {
                jobs.push(Job { family, p, n });
            }
        }
    }
    let run = || {
        jobs.par_iter()
            .map(|job| run_job(suite, job, options))
            .collect::<Result<Vec<Vec<VerificationReport>>>>()
    };
    let nested = if options.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(run)?
    } else {
        run()?
    };
    let mut reports: Vec<VerificationReport> = nested.into_iter().flatten().collect();
    reports.sort_by_key(|r| (r.family, r.p, r.n, r.quantity));
    Ok(reports)
}

/// A construction in feedback-set form, checked against its graph.
struct Certified {
    graph: LabeledGraph,
    fvs: Vec<String>,
}

fn certify(graph: LabeledGraph, forest: BTreeSet<String>, what: &str) -> Result<Certified> {
    let mask = graph.mask(&forest)?;
    if let Some(cycle) = graph.find_cycle_mask(&mask) {
        return Err(Error::CycleFound {
            what: what.to_string(),
            cycle: cycle.into_iter().map(|v| graph.label(v).to_string()).collect(),
        });
    }
    let fvs = (0..graph.order())
        .filter(|&v| !mask[v])
        .map(|v| graph.label(v).to_string())
        .collect();
    Ok(Certified { graph, fvs })
}

/// `(exact, best found)` feedback numbers; both absent unless requested.
fn exact_tau(c: &Certified, options: &VerifyOptions) -> Result<(Option<u64>, Option<u64>)> {
    if !options.exact {
        return Ok((None, None));
    }
    let cert = tau_bnb(
        &c.graph,
        &BnbOptions {
            budget: options.budget,
            seed: Some(c.fvs.clone()),
        },
    )?;
    let tau = cert.tau as u64;
    Ok((cert.optimal.then_some(tau), Some(tau)))
}

fn labels<V>(set: impl IntoIterator<Item = V>, p: u32, wrap: impl Fn(V) -> FamilyVertex) -> BTreeSet<String> {
    set.into_iter().map(|v| format_vertex(&wrap(v), p)).collect()
}

fn tau_s(p: u32, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    (p as u64).pow(n as u32 - 1) * (p as u64).saturating_sub(2)
}

fn run_job(suite: Suite, job: &Job, options: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let start = Instant::now();
    let Job { family, p, n } = *job;
    let report = |quantity, predicted, constructed, (exact, best_found): (Option<u64>, Option<u64>), status| VerificationReport {
        schema: SCHEMA_VERSION,
        suite,
        family,
        p,
        n,
        quantity,
        predicted,
        constructed,
        exact,
        best_found,
        status,
        runtime_ms: start.elapsed().as_millis() as u64,
    };
    let tau_status = |predicted: u64, constructed: u64, exact: Option<u64>| match exact {
        _ if constructed != predicted => Status::Mismatch,
        Some(t) if t != predicted => Status::Mismatch,
        Some(_) => Status::Match,
        None => Status::BoundOnly,
    };
    match suite {
        Suite::Counts => {
            let g = generate(family, p, n)?;
            let (order, size) = (g.order() as u64, g.size() as u64);
            let (want_order, want_size) = (expected_order(family, p, n), expected_size(family, p, n));
            let status = |got: u64, want: u64| {
                if got == want {
                    Status::Match
                } else {
                    Status::Mismatch
                }
            };
            Ok(vec![
                report(Quantity::Order, want_order, order, (Some(order), None), status(order, want_order)),
                report(Quantity::Size, want_size, size, (Some(size), None), status(size, want_size)),
            ])
        }
        Suite::Sierpinski => {
            let g = generate(family, p, n)?;
            let fvs: BTreeSet<String> = fvs_sierpinski(p, n)?.iter().map(|w| w.format(p)).collect();
            let forest = g.labels().iter().filter(|l| !fvs.contains(*l)).cloned().collect();
            let c = certify(g, forest, "S_p^n forest")?;
            let predicted = tau_s(p, n);
            let constructed = c.fvs.len() as u64;
            let solved = exact_tau(&c, options)?;
            Ok(vec![report(Quantity::Tau, predicted, constructed, solved, tau_status(predicted, constructed, solved.0))])
        }
        Suite::Plus => {
            let g = generate(family, p, n)?;
            let forest = labels(forest_plus(p, n)?, p, FamilyVertex::Plus);
            let c = certify(g, forest, "plus forest")?;
            let predicted = if p == 2 { 1 } else { tau_s(p, n) };
            let constructed = c.fvs.len() as u64;
            let solved = exact_tau(&c, options)?;
            Ok(vec![report(Quantity::Tau, predicted, constructed, solved, tau_status(predicted, constructed, solved.0))])
        }
        Suite::PlusPlus => {
            let g = generate(family, p, n)?;
            let forest = labels(forest_plusplus(p, n)?, p, FamilyVertex::PlusPlus);
            let c = certify(g, forest, "plus-plus forest")?;
            let predicted = tau_s(p, n) + tau_s(p, n - 1);
            let constructed = c.fvs.len() as u64;
            let solved = exact_tau(&c, options)?;
            Ok(vec![report(Quantity::Tau, predicted, constructed, solved, tau_status(predicted, constructed, solved.0))])
        }
        Suite::TriangleP3 => {
            if p != 3 {
                return Err(Error::Unsupported(format!("triangle-p3 covers p = 3 only (got p = {p})")));
            }
            let g = generate(family, p, n)?;
            let fvs: BTreeSet<String> = a_set(n).iter().map(|v| v.format(p)).collect();
            let forest = g.labels().iter().filter(|l| !fvs.contains(*l)).cloned().collect();
            let c = certify(g, forest, "triangle p=3 forest")?;
            let predicted = predicted_tau_p3(n);
            let constructed = c.fvs.len() as u64;
            let solved = exact_tau(&c, options)?;
            Ok(vec![report(Quantity::Tau, predicted, constructed, solved, tau_status(predicted, constructed, solved.0))])
        }
        Suite::TriangleLower | Suite::Conjecture => {
            let g = generate(family, p, n)?;
            let order = g.order() as u64;
            let forest: BTreeSet<String> = b_star(p, n)?.iter().map(|v| v.format(p)).collect();
            let c = certify(g, forest, "B_n^* forest")?;
            let constructed = order - c.fvs.len() as u64;
            let predicted = if n >= 3 {
                predicted_f_lower(p, n)?
            } else {
                f_small_triangle(p, n)?
            };
            let solved = exact_tau(&c, options)?;
            let exact = solved.0.map(|t| order - t);
            let best = solved.1.map(|t| order - t);
            let status = if constructed != predicted {
                Status::Mismatch
            } else {
                match (suite, exact) {
                    (Suite::TriangleLower, Some(f)) if f < predicted => Status::Mismatch,
                    (Suite::TriangleLower, _) => Status::Match,
                    (_, Some(f)) if f == predicted => Status::Match,
                    (_, Some(_)) => Status::Mismatch,
                    (_, None) => Status::BoundOnly,
                }
            };
            Ok(vec![report(Quantity::F, predicted, constructed, (exact, best), status)])
        }
    }
}

pub fn any_mismatch(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Mismatch)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "table" => Ok(ReportFormat::Table),
            other => Err(Error::Unsupported(format!("unknown report format {other:?}"))),
        }
    }
}

/// The exact value, or the solver's best bound marked with its direction.
fn exact_cell(r: &VerificationReport) -> String {
    match (r.exact, r.best_found) {
        (Some(x), _) => x.to_string(),
        (None, Some(b)) if r.quantity == Quantity::F => format!(">={b}"),
        (None, Some(b)) => format!("<={b}"),
        (None, None) => "-".to_string(),
    }
}

pub fn report_render(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            if reports.is_empty() {
                return "[]".to_string();
            }
            serde_json::to_string_pretty(reports).expect("reports serialize")
        }
        ReportFormat::Table => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:<10} {:<6} {:>3} {:>3} {:<5} {:>12} {:>12} {:>12} {:<11} {:>9}",
                "suite", "family", "p", "n", "qty", "predicted", "constructed", "exact", "status", "ms"
            );
            for r in reports {
                let qty = serde_json::to_value(r.quantity).unwrap();
                let status = serde_json::to_value(r.status).unwrap();
                let _ = writeln!(
                    out,
                    "{:<10} {:<6} {:>3} {:>3} {:<5} {:>12} {:>12} {:>12} {} {:<9} {:>9}",
                    r.suite.name(),
                    r.family.name(),
                    r.p,
                    r.n,
                    qty.as_str().unwrap(),
                    r.predicted,
                    r.constructed,
                    exact_cell(r),
                    r.status.symbol(),
                    status.as_str().unwrap(),
                    r.runtime_ms
                );
            }
            out
        }
    }
}

/// Reads reports written by [`report_render`] in JSON form.
pub fn parse_reports(text: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(text).map_err(|e| Error::Unsupported(format!("bad report file: {e}")))
}
