use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sierpinski_fvs::addressing::{format_vertex, Family, FamilyVertex};
use sierpinski_fvs::exact_fvs::{tau_bnb, tau_bruteforce, BnbOptions, DEFAULT_BUDGET};
use sierpinski_fvs::generators::generate;
use sierpinski_fvs::pairable::{forest_plus, forest_plusplus, forest_sierpinski};
use sierpinski_fvs::triangle_forest::{a_set, b_star, structure_report};
use sierpinski_fvs::verify::{
    any_mismatch, parse_range, parse_reports, report_render, verify, Ranges, ReportFormat, Suite,
    VerifyOptions,
};
use sierpinski_fvs::{Error, Result};

#[derive(Parser)]
#[command(name = "sfvs", version, about = "Sierpiński graph feedback vertex set toolkit")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format: edges|dot for generate, json|table for verify/report
    #[arg(long, global = true)]
    format: Option<String>,
    /// Branch-and-bound node budget per instance
    #[arg(long, global = true, env = "SFVS_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Run the exact solver in verify suites
    #[arg(long, global = true)]
    exact: bool,
    /// Worker threads for verify (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args, Clone)]
struct Instance {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(short)]
    p: u32,
    #[arg(short)]
    n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Bnb,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as an edge list or DOT
    Generate(Instance),
    /// Print the explicit induced forest of an instance
    Forest {
        #[command(flatten)]
        instance: Instance,
        /// Emit the path decomposition report of the triangle construction
        #[arg(long)]
        structure: bool,
    },
    /// Compute the feedback vertex number exactly
    Tau {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Method::Bnb)]
        method: Method,
    },
    /// Run a verification suite
    Verify {
        /// counts, sierpinski, plus, plusplus, triangle-p3, triangle-bound or conjecture
        suite: String,
        /// Values of p: "3", "2..5" or "2,4"
        #[arg(short, default_value = "3")]
        p: String,
        /// Values of n, same syntax as -p
        #[arg(short, default_value = "1..3")]
        n: String,
        /// Families for the counts suite (comma separated)
        #[arg(long, default_value = "s,plus,pp,hat")]
        families: String,
    },
    /// Re-render a JSON report file
    Report { file: PathBuf },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn emit(global: &Global, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &global.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn report_format(global: &Global) -> Result<ReportFormat> {
    global.format.as_deref().unwrap_or("json").parse()
}

fn forest_labels(inst: &Instance) -> Result<BTreeSet<String>> {
    let p = inst.p;
    let n = inst.n;
    Ok(match inst.family {
        Family::S => forest_sierpinski(p, n)?
            .into_iter()
            .map(|w| format_vertex(&FamilyVertex::Sierpinski(w), p))
            .collect(),
        Family::Plus => forest_plus(p, n)?
            .into_iter()
            .map(|v| format_vertex(&FamilyVertex::Plus(v), p))
            .collect(),
        Family::PlusPlus => forest_plusplus(p, n)?
            .into_iter()
            .map(|v| format_vertex(&FamilyVertex::PlusPlus(v), p))
            .collect(),
        Family::Hat if p == 3 => {
            let a: BTreeSet<String> = a_set(n).iter().map(|v| v.format(p)).collect();
            generate(Family::Hat, p, n)?
                .labels()
                .iter()
                .filter(|l| !a.contains(*l))
                .cloned()
                .collect()
        }
        Family::Hat => b_star(p, n)?.iter().map(|v| v.format(p)).collect(),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let global = &cli.global;
    match cli.command {
        Command::Generate(inst) => {
            let g = generate(inst.family, inst.p, inst.n)?;
            let text = match global.format.as_deref().unwrap_or("edges") {
                "edges" => g.export_edgelist(),
                "dot" => g.export_dot(),
                other => return Err(Error::Unsupported(format!("unknown graph format {other:?}"))),
            };
            emit(global, &text)?;
        }
        Command::Forest { instance, structure } => {
            let g = generate(instance.family, instance.p, instance.n)?;
            if structure {
                if instance.family != Family::Hat {
                    return Err(Error::Unsupported("--structure needs --family hat".into()));
                }
                let report = structure_report(instance.p, instance.n, &g)?;
                emit(global, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
                return Ok(if report.ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
            }
            let forest = forest_labels(&instance)?;
            let mask = g.mask(&forest)?;
            if let Some(cycle) = g.find_cycle_mask(&mask) {
                return Err(Error::CycleFound {
                    what: "constructed forest".into(),
                    cycle: cycle.into_iter().map(|v| g.label(v).to_string()).collect(),
                });
            }
            let mut text = String::new();
            for label in &forest {
                text.push_str(label);
                text.push('\n');
            }
            text.push_str(&format!(
                "size={} complement={} acyclic=true",
                forest.len(),
                g.order() - forest.len()
            ));
            emit(global, &text)?;
        }
        Command::Tau { instance, method } => {
            let g = generate(instance.family, instance.p, instance.n)?;
            let cert = match method {
                Method::Brute => tau_bruteforce(&g)?,
                Method::Bnb => {
                    let seed = forest_labels(&instance).ok().map(|forest| {
                        g.labels()
                            .iter()
                            .filter(|l| !forest.contains(*l))
                            .cloned()
                            .collect()
                    });
                    tau_bnb(
                        &g,
                        &BnbOptions {
                            budget: global.budget,
                            seed,
                        },
                    )?
                }
            };
            emit(
                global,
                &format!(
                    "tau={} optimal={} witness={}",
                    cert.tau,
                    cert.optimal,
                    cert.witness.join(",")
                ),
            )?;
        }
        Command::Verify {
            suite,
            p,
            n,
            families,
        } => {
            let suite: Suite = suite.parse()?;
            let ranges = Ranges {
                p: parse_range(&p)?.into_iter().map(|x| x as u32).collect(),
                n: parse_range(&n)?.into_iter().map(|x| x as usize).collect(),
                families: families
                    .split(',')
                    .map(|f| f.trim().parse())
                    .collect::<Result<_>>()?,
            };
            let options = VerifyOptions {
                exact: global.exact,
                budget: global.budget,
                jobs: global.jobs,
            };
            let reports = verify(suite, &ranges, &options)?;
            emit(global, &report_render(&reports, report_format(global)?))?;
            if any_mismatch(&reports) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Report { file } => {
            let reports = parse_reports(&fs::read_to_string(file)?)?;
            emit(global, &report_render(&reports, report_format(global)?))?;
            if any_mismatch(&reports) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
