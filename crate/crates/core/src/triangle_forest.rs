//! Feedback sets and induced forests of Sierpiński triangle graphs `Ŝ_p^n`.
//!
//! * `p = 3`: the recursive minimum feedback set `A_n`, built from three
//!   embeddings of `A_{n-1}` that share a single corner image.
//! * `p >= 4`: the linear-forest construction `B_n^*`, seeded at level 2 by
//!   paths `A_s^2` joining corner pairs `ĥs, ĥ(s+1)` (plus the path `T'` for
//!   odd `p`) and lifted level by level through all `p` subtriangles, dropping
//!   the top-level pairs `{s1,s2}` that would close cycles.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::addressing::{prefix_triangle, prefix_triangle_word, Symbol, TriangleVertex, Word};
use crate::error::{Error, Result};
use crate::generators::expected_order;
use crate::graph::LabeledGraph;

pub type VertexSet = BTreeSet<TriangleVertex>;

fn lift(i: Symbol, set: &VertexSet) -> VertexSet {
    set.iter().map(|v| prefix_triangle(i, v)).collect()
}

fn lift_word(w: &Word, set: &VertexSet) -> VertexSet {
    set.iter().map(|v| prefix_triangle_word(w, v)).collect()
}

/// Applies a symbol permutation to every symbol of a `p = 3` vertex.
fn permute(v: &TriangleVertex, perm: [Symbol; 3]) -> TriangleVertex {
    match v {
        TriangleVertex::Hat(k) => TriangleVertex::Hat(perm[*k as usize]),
        TriangleVertex::Contracted { prefix, pair } => TriangleVertex::contracted(
            Word::from_symbols(prefix.symbols().iter().map(|&s| perm[s as usize]).collect()),
            perm[pair.lo() as usize],
            perm[pair.hi() as usize],
        ),
    }
}

/// Symbol permutations `σ_j` with `f_j = j·σ_j(·)`. They send the corner
/// `ĥ0` of subtriangle 1 and 2 onto the shared middle pair `{1,2}`, so the
/// three copies of `A_{n-1}` overlap in exactly one vertex.
const EMBEDDING_PERMUTATIONS: [[Symbol; 3]; 3] = [[0, 1, 2], [2, 0, 1], [1, 2, 0]];

/// The embedding `f_j` of `Ŝ_3^{n-1}` onto subtriangle `j` of `Ŝ_3^n`.
pub fn embed_p3(j: Symbol, v: &TriangleVertex) -> TriangleVertex {
    prefix_triangle(j, &permute(v, EMBEDDING_PERMUTATIONS[j as usize]))
}

/// Minimum feedback set `A_n` of `Ŝ_3^n`: `A_0 = {ĥ0}`,
/// `A_n = f_0(A_{n-1}) ∪ f_1(A_{n-1}) ∪ f_2(A_{n-1})`.
pub fn a_set(n: usize) -> VertexSet {
    let mut a: VertexSet = [TriangleVertex::Hat(0)].into();
    for _ in 0..n {
        a = (0..3)
            .flat_map(|j| a.iter().map(move |v| embed_p3(j, v)))
            .collect();
    }
    a
}

/// `(3^n + 1) / 2`.
pub fn predicted_tau_p3(n: usize) -> u64 {
    3u64.pow(n as u32).div_ceil(2)
}

/// `f(Ŝ_p^n)` for `n <= 2`.
pub fn f_small_triangle(p: u32, n: usize) -> Result<u64> {
    let p = p as u64;
    let even = p.is_multiple_of(2);
    match n {
        0 => Ok(2),
        1 if even => Ok(3 * p / 2),
        1 => Ok((3 * p - 1) / 2),
        2 if even => Ok(p * p + p / 2),
        2 => Ok(p * p + (p - 1) / 2),
        _ => Err(Error::Unsupported(format!(
            "small-level formula covers n <= 2, got n = {n}"
        ))),
    }
}

fn require_p4(p: u32) -> Result<()> {
    if p < 4 {
        return Err(Error::Unsupported(format!(
            "the B_n^* construction needs p >= 4 (got p = {p})"
        )));
    }
    Ok(())
}

/// Left corners `s` of the corner pairs `(s, s+1)` carrying the `A_s` paths:
/// `{0, 2, …, p-2}` for even `p`, `{0, 2, …, p-3}` for odd `p`.
pub fn corner_starts(p: u32) -> Vec<Symbol> {
    let top = if p.is_multiple_of(2) { p - 1 } else { p - 2 };
    (0..top).step_by(2).collect()
}

/// Top-level pairs `{s1, s2}` with `s1 != s2` both corner starts.
pub fn removed_pairs(p: u32) -> VertexSet {
    let s = corner_starts(p);
    let mut out = VertexSet::new();
    for (x, &a) in s.iter().enumerate() {
        for &b in &s[x + 1..] {
            out.insert(TriangleVertex::contracted(Word::empty(), a, b));
        }
    }
    out
}

/// `A_s^2 = {ĥs, ĥ(s+1), {s,s+1}} ∪ {s{i,i+1}, (s+1){i,i+1} : i ∈ P∖{s}}`,
/// with `i+1` taken mod `p`. Induces a path of order `2p+1` from `ĥs` to `ĥ(s+1)`.
pub fn a_s2(s: Symbol, p: u32) -> Result<VertexSet> {
    if s + 1 >= p {
        return Err(Error::Unsupported(format!("need s + 1 < p (s = {s}, p = {p})")));
    }
    let mut out: VertexSet = [
        TriangleVertex::Hat(s),
        TriangleVertex::Hat(s + 1),
        TriangleVertex::contracted(Word::empty(), s, s + 1),
    ]
    .into();
    for i in (0..p).filter(|&i| i != s) {
        let next = (i + 1) % p;
        out.insert(TriangleVertex::contracted(Word::repeat(s, 1), i, next));
        out.insert(TriangleVertex::contracted(Word::repeat(s + 1, 1), i, next));
    }
    Ok(out)
}

/// `T' = {ĥ(p-1)} ∪ {(p-1){i,i+1} : 0 <= i <= p-2}`; a path of order `p` from
/// `(p-1){0,1}` to `ĥ(p-1)`.
pub fn t_prime(p: u32) -> VertexSet {
    let top = p - 1;
    let mut out: VertexSet = [TriangleVertex::Hat(top)].into();
    for i in 0..top {
        out.insert(TriangleVertex::contracted(Word::repeat(top, 1), i, i + 1));
    }
    out
}

/// `B_2^*`: all `A_s^2` (and `T'` for odd `p`).
pub fn b_star_base(p: u32) -> Result<VertexSet> {
    require_p4(p)?;
    let mut out = VertexSet::new();
    for s in corner_starts(p) {
        out.extend(a_s2(s, p)?);
    }
    if p % 2 == 1 {
        out.extend(t_prime(p));
    }
    Ok(out)
}

/// `B_n^*`, level by level: `B_k^* = (⋃_j j·B_{k-1}^*) ∖ A`.
pub fn b_star(p: u32, n: usize) -> Result<VertexSet> {
    Ok(b_star_levels(p, n)?.pop().expect("at least level 2"))
}

/// `[B_2^*, …, B_n^*]`.
pub fn b_star_levels(p: u32, n: usize) -> Result<Vec<VertexSet>> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "B_n^* is defined for n >= 2 (got n = {n})"
        )));
    }
    let removed = removed_pairs(p);
    let mut levels = vec![b_star_base(p)?];
    for _ in 3..=n {
        let mut next = VertexSet::new();
        for j in 0..p {
            next.extend(lift(j, levels.last().unwrap()));
        }
        levels.push(&next - &removed);
    }
    Ok(levels)
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `|B_n^*|` from `|B_2^*| = f(Ŝ_p^2)` and
/// `|B_k^*| = p|B_{k-1}^*| - p(p-1)/2 - C(|S|, 2)`.
pub fn b_star_size_recurrence(p: u32, n: usize) -> Result<u64> {
    require_p4(p)?;
    let mut size = f_small_triangle(p, 2)?;
    let pp = p as u64;
    let pairs = choose2(corner_starts(p).len() as u64);
    for _ in 3..=n {
        size = pp * size - pp * (pp - 1) / 2 - pairs;
    }
    Ok(size)
}

/// Closed-form lower bound on `f(Ŝ_p^n)` for `n >= 3`, `p >= 4`.
pub fn predicted_f_lower(p: u32, n: usize) -> Result<u64> {
    require_p4(p)?;
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "closed form covers n >= 3 (got n = {n})"
        )));
    }
    let p = p as i128;
    let pow = |e: usize| p.pow(e as u32);
    let value = if p % 2 == 0 {
        // p^n - p^{n-1}/8 + (p^{n-2} + … + p)/8 + 5p/8
        let geometric: i128 = (1..=n - 2).map(pow).sum();
        let numerator = 8 * pow(n) - pow(n - 1) + geometric + 5 * p;
        if numerator % 8 != 0 {
            return Err(Error::Construction(format!(
                "even closed form is not integral: {numerator}/8"
            )));
        }
        numerator / 8
    } else {
        let inner = pow(n - 1) + pow(n - 2) - 5 * p + 3;
        if inner % 8 != 0 {
            return Err(Error::Construction(format!(
                "odd closed form is not integral: {inner}/8"
            )));
        }
        pow(n) - inner / 8
    };
    Ok(value as u64)
}

/// Membership mask of a vertex set inside a generated `Ŝ_p^n`.
pub fn mask_of(g: &LabeledGraph, set: &VertexSet, p: u32) -> Result<Vec<bool>> {
    g.mask(set.iter().map(|v| v.format(p)))
}

/// Path orders (order → count) of a linear forest, or the offending structure.
pub fn path_profile(g: &LabeledGraph, mask: &[bool]) -> Result<BTreeMap<usize, usize>> {
    if let Some(cycle) = g.find_cycle_mask(mask) {
        return Err(Error::CycleFound {
            what: "linear forest candidate".into(),
            cycle: cycle.into_iter().map(|v| g.label(v).to_string()).collect(),
        });
    }
    let sub = g.induced_mask(mask);
    if sub.max_degree() > 2 {
        let v = (0..sub.order())
            .find(|&v| sub.neighbors(v).len() > 2)
            .unwrap();
        return Err(Error::Construction(format!(
            "vertex {} has degree {} in the induced forest",
            sub.label(v),
            sub.neighbors(v).len()
        )));
    }
    let mut profile = BTreeMap::new();
    for comp in sub.components() {
        *profile.entry(comp.len()).or_insert(0) += 1;
    }
    Ok(profile)
}

/// Paths predicted for one named piece of `B_n^*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    pub name: String,
    pub size: usize,
    pub expected_paths: usize,
    pub expected_order: usize,
    /// Observed path orders of the piece on its own (order → count).
    pub observed: BTreeMap<usize, usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub p: u32,
    pub n: usize,
    pub size: usize,
    /// Path orders of `Ŝ_p^n[B_n^*]` (order → count).
    pub observed: BTreeMap<usize, usize>,
    /// Union of the per-piece predictions.
    pub predicted: BTreeMap<usize, usize>,
    pub pieces: Vec<PieceReport>,
    /// The named pieces partition `B_n^*`.
    pub pieces_cover: bool,
    /// None of the pieces meets the removed top-level pairs.
    pub disjoint_from_removed: bool,
    pub ok: bool,
}

/// A named piece of `B_n^*` with the paths it is predicted to induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedPiece {
    pub name: String,
    pub set: VertexSet,
    pub expected_paths: usize,
    pub expected_order: usize,
}

/// Everything the `p >= 4` construction materializes for one `(p, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleConstructionState {
    pub p: u32,
    pub n: usize,
    /// `B_k^*` for `k = 2..=n`, at index `k - 2`.
    pub levels: Vec<VertexSet>,
    /// `A_s^n`, `B_k^{n-k}`, and for odd `p` also `T_k^{n-k}` and `(p-1)^{n-2}T'`.
    pub pieces: Vec<NamedPiece>,
}

impl TriangleConstructionState {
    pub fn new(p: u32, n: usize) -> Result<Self> {
        let levels = b_star_levels(p, n)?;
        let pieces = named_pieces(p, n)?
            .into_iter()
            .map(|(name, set, expected_paths, expected_order)| NamedPiece {
                name,
                set,
                expected_paths,
                expected_order,
            })
            .collect();
        Ok(TriangleConstructionState { p, n, levels, pieces })
    }

    pub fn b_star(&self) -> &VertexSet {
        self.levels.last().expect("at least level 2")
    }
}

/// Named pieces of `B_n^*` built from their own definitions (not from the
/// level recursion), each with its predicted path count and order.
fn named_pieces(p: u32, n: usize) -> Result<Vec<(String, VertexSet, usize, usize)>> {
    let s_list = corner_starts(p);
    let pu = p as usize;
    let pow2 = |e: usize| 1usize << e;
    let mut a_levels: BTreeMap<Symbol, Vec<VertexSet>> = BTreeMap::new();
    for &s in &s_list {
        // index k holds A_s^k, k >= 2
        let mut levels = vec![VertexSet::new(), VertexSet::new(), a_s2(s, p)?];
        for k in 3..=n {
            let prev = &levels[k - 1];
            let next: VertexSet = lift(s, prev).union(&lift(s + 1, prev)).cloned().collect();
            levels.push(next);
        }
        a_levels.insert(s, levels);
    }
    let mut pieces = Vec::new();
    for &s in &s_list {
        pieces.push((
            format!("A_{s}^{n}"),
            a_levels[&s][n].clone(),
            1,
            pow2(n - 1) * pu + 1,
        ));
    }
    let pairs = choose2(s_list.len() as u64) as usize;
    let top = p - 1;
    let t = t_prime(p);
    for k in 3..=n {
        let mut b_k = VertexSet::new();
        for (x, &s1) in s_list.iter().enumerate() {
            for &s2 in &s_list[x + 1..] {
                let mut group = VertexSet::new();
                group.extend(lift(s1, &a_levels[&s2][k - 1]));
                group.extend(lift(s1 + 1, &a_levels[&s2][k - 1]));
                group.extend(lift(s2, &a_levels[&s1][k - 1]));
                group.extend(lift(s2 + 1, &a_levels[&s1][k - 1]));
                group.remove(&TriangleVertex::contracted(Word::empty(), s1, s2));
                b_k.extend(group);
            }
        }
        let spread = prefixes_lift(p, n - k, &b_k);
        pieces.push((
            format!("B_{k}^{}", n - k),
            spread,
            pu.pow((n - k) as u32) * pairs,
            pow2(k) * pu - 1,
        ));
        if p % 2 == 1 {
            let tail = Word::repeat(top, k - 3);
            let mut t_k = VertexSet::new();
            for &s in &s_list {
                t_k.extend(lift(top, &a_levels[&s][k - 1]));
                t_k.extend(lift_word(&prefix_of(s, &tail), &t));
                t_k.extend(lift_word(&prefix_of(s + 1, &tail), &t));
            }
            let spread = prefixes_lift(p, n - k, &t_k);
            pieces.push((
                format!("T_{k}^{}", n - k),
                spread,
                pu.pow((n - k) as u32) * (pu - 1) / 2,
                pow2(k - 2) * pu + 2 * pu - 1,
            ));
        }
    }
    if p % 2 == 1 {
        pieces.push((
            format!("({top})^{}T'", n - 2),
            lift_word(&Word::repeat(top, n - 2), &t),
            1,
            pu,
        ));
    }
    Ok(pieces)
}

fn prefix_of(s: Symbol, tail: &Word) -> Word {
    crate::addressing::prefix_word(s, tail)
}

/// `{j·b : j ∈ P^len, b ∈ set}`.
fn prefixes_lift(p: u32, len: usize, set: &VertexSet) -> VertexSet {
    let mut cur = set.clone();
    for _ in 0..len {
        let mut next = VertexSet::new();
        for j in 0..p {
            next.extend(lift(j, &cur));
        }
        cur = next;
    }
    cur
}

/// Decomposes `Ŝ_p^n[B_n^*]` into paths and checks them against the named
/// pieces and their predicted path counts and orders.
pub fn structure_report(p: u32, n: usize, g: &LabeledGraph) -> Result<StructureReport> {
    let state = TriangleConstructionState::new(p, n)?;
    let b = state.b_star();
    let observed = path_profile(g, &mask_of(g, b, p)?)?;
    let removed = removed_pairs(p);
    let mut pieces = Vec::new();
    let mut predicted: BTreeMap<usize, usize> = BTreeMap::new();
    let mut union = VertexSet::new();
    let mut total = 0usize;
    let mut disjoint = true;
    for piece in &state.pieces {
        let (count, order) = (piece.expected_paths, piece.expected_order);
        let own = path_profile(g, &mask_of(g, &piece.set, p)?)?;
        let ok = own.len() == 1 && own.get(&order) == Some(&count);
        if count > 0 {
            *predicted.entry(order).or_insert(0) += count;
        }
        disjoint &= piece.set.is_disjoint(&removed);
        total += piece.set.len();
        union.extend(piece.set.iter().cloned());
        pieces.push(PieceReport {
            name: piece.name.clone(),
            size: piece.set.len(),
            expected_paths: count,
            expected_order: order,
            observed: own,
            ok: ok || (count == 0 && piece.set.is_empty()),
        });
    }
    let pieces_cover = union == *b && total == b.len();
    let ok = pieces_cover && disjoint && observed == predicted && pieces.iter().all(|x| x.ok);
    Ok(StructureReport {
        p,
        n,
        size: b.len(),
        observed,
        predicted,
        pieces,
        pieces_cover,
        disjoint_from_removed: disjoint,
        ok,
    })
}

/// Constructed bound versus (optional) exact value for `Ŝ_p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureGap {
    pub p: u32,
    pub n: usize,
    pub order: u64,
    /// Order of the constructed induced forest.
    pub constructed_f: u64,
    /// `|V| - constructed_f`.
    pub tau_upper: u64,
    pub exact_tau: Option<u64>,
    /// `tau_upper - exact_tau` when the exact value is known.
    pub gap: Option<u64>,
}

/// `constructed_f` is `|B_n^*|` for `n >= 2` (verified to induce a forest by
/// the caller) and the small-level formula below that.
pub fn conjecture_gap(p: u32, n: usize, exact_tau: Option<u64>) -> Result<ConjectureGap> {
    let order = expected_order(crate::addressing::Family::Hat, p, n);
    let constructed_f = if n >= 2 {
        b_star(p, n)?.len() as u64
    } else {
        f_small_triangle(p, n)?
    };
    let tau_upper = order - constructed_f;
    Ok(ConjectureGap {
        p,
        n,
        order,
        constructed_f,
        tau_upper,
        exact_tau,
        gap: exact_tau.map(|t| tau_upper.saturating_sub(t)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::triangle;

    #[test]
    fn a_set_small() {
        assert_eq!(a_set(0), [TriangleVertex::Hat(0)].into());
        assert_eq!(
            a_set(1),
            [
                TriangleVertex::Hat(0),
                TriangleVertex::contracted(Word::empty(), 1, 2)
            ]
            .into()
        );
        assert_eq!(a_set(3).len(), 14);
    }

    #[test]
    fn embeddings_match_listed_corner_images() {
        use TriangleVertex::Hat;
        let pair = |i, j| TriangleVertex::contracted(Word::empty(), i, j);
        // relabeled names: vertex "0" is {1,2}, "1" is {0,2}, "2" is {0,1}
        let listed = [
            [Hat(0), pair(0, 1), pair(0, 2)],
            [pair(1, 2), pair(0, 1), Hat(1)],
            [pair(1, 2), Hat(2), pair(0, 2)],
        ];
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(embed_p3(j, &Hat(k)), listed[j as usize][k as usize]);
            }
        }
    }

    #[test]
    fn a_set_recurrence_and_corners() {
        for n in 1..=5 {
            let a = a_set(n);
            assert_eq!(a.len() as u64, 3 * a_set(n - 1).len() as u64 - 1);
            assert_eq!(a.len() as u64, predicted_tau_p3(n));
            let hats: Vec<_> = a.iter().filter(|v| v.is_hat()).collect();
            assert_eq!(hats, vec![&TriangleVertex::Hat(0)]);
        }
    }

    #[test]
    fn f_small_values() {
        assert_eq!(f_small_triangle(4, 1).unwrap(), 6);
        assert_eq!(f_small_triangle(5, 2).unwrap(), 27);
        assert_eq!(f_small_triangle(6, 0).unwrap(), 2);
        assert!(f_small_triangle(6, 3).is_err());
    }

    #[test]
    fn a_s2_is_a_corner_path() {
        let g = triangle(4, 2);
        let set = a_s2(0, 4).unwrap();
        assert_eq!(set.len(), 9);
        let mask = mask_of(&g, &set, 4).unwrap();
        assert_eq!(path_profile(&g, &mask).unwrap(), [(9, 1)].into());
        let sub = g.induced_mask(&mask);
        let ends: BTreeSet<&str> = (0..sub.order())
            .filter(|&v| sub.neighbors(v).len() == 1)
            .map(|v| sub.label(v))
            .collect();
        assert_eq!(ends, ["^0", "^1"].into());
        assert_eq!(a_s2(2, 6).unwrap().len(), 13);
    }

    #[test]
    fn t_prime_is_a_path() {
        for p in [5, 7] {
            let g = triangle(p, 2);
            let t = t_prime(p);
            assert_eq!(t.len(), p as usize);
            let mask = mask_of(&g, &t, p).unwrap();
            assert_eq!(path_profile(&g, &mask).unwrap(), [(p as usize, 1)].into());
            let sub = g.induced_mask(&mask);
            let ends: BTreeSet<String> = (0..sub.order())
                .filter(|&v| sub.neighbors(v).len() == 1)
                .map(|v| sub.label(v).to_string())
                .collect();
            let want: BTreeSet<String> =
                [format!("{}:{{0,1}}", p - 1), format!("^{}", p - 1)].into();
            assert_eq!(ends, want);
        }
    }

    #[test]
    fn b_star_sizes() {
        assert_eq!(b_star(4, 2).unwrap().len(), 18);
        assert_eq!(b_star(4, 3).unwrap().len(), 65);
        assert_eq!(b_star(5, 3).unwrap().len(), 124);
        assert_eq!(b_star_size_recurrence(6, 3).unwrap(), 216);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(predicted_f_lower(4, 3).unwrap(), 65);
        assert_eq!(predicted_f_lower(5, 3).unwrap(), 124);
        assert_eq!(predicted_f_lower(6, 3).unwrap(), 216);
        for p in 4..=9 {
            for n in 3..=6 {
                assert_eq!(
                    predicted_f_lower(p, n).unwrap(),
                    b_star_size_recurrence(p, n).unwrap(),
                    "p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn structure_of_small_instances() {
        let g = triangle(4, 3);
        let report = structure_report(4, 3, &g).unwrap();
        assert!(report.ok, "{report:#?}");
        assert_eq!(report.observed, [(17, 2), (31, 1)].into());

        let g = triangle(5, 3);
        let report = structure_report(5, 3, &g).unwrap();
        assert!(report.ok, "{report:#?}");
        assert_eq!(report.observed.get(&5), Some(&1));
        assert_eq!(report.observed.iter().map(|(o, c)| o * c).sum::<usize>(), 124);
    }

    #[test]
    fn construction_state_levels() {
        let state = TriangleConstructionState::new(5, 4).unwrap();
        let sizes: Vec<u64> = state.levels.iter().map(|l| l.len() as u64).collect();
        assert_eq!(sizes, vec![27, 124, 609]);
        let names: Vec<&str> = state.pieces.iter().map(|x| x.name.as_str()).collect();
        assert_eq!(names, ["A_0^4", "A_2^4", "B_3^1", "T_3^1", "B_4^0", "T_4^0", "(4)^2T'"]);
    }

    #[test]
    fn gap_examples() {
        assert_eq!(conjecture_gap(4, 2, None).unwrap().tau_upper, 16);
        assert_eq!(conjecture_gap(4, 3, None).unwrap().tau_upper, 65);
        assert_eq!(conjecture_gap(5, 1, None).unwrap().tau_upper, 8);
        let with_exact = conjecture_gap(4, 2, Some(16)).unwrap();
        assert_eq!(with_exact.gap, Some(0));
    }
}
