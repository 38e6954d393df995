//! Exact feedback vertex numbers: subset enumeration for tiny graphs and a
//! branch-and-bound search with kernelization for everything else.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::multigraph::{Reduced, SolverMultigraph};
use crate::graph::{LabeledGraph, UnionFind};

pub const DEFAULT_BRUTE_CAP: usize = 22;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FvsCertificate {
    pub tau: usize,
    /// Sorted labels of the feedback set.
    pub witness: Vec<String>,
    /// `true` when no smaller feedback set exists.
    pub optimal: bool,
}

impl FvsCertificate {
    fn from_indices(g: &LabeledGraph, mut set: Vec<usize>, optimal: bool) -> Self {
        set.sort_unstable();
        FvsCertificate {
            tau: set.len(),
            witness: set.into_iter().map(|v| g.label(v).to_string()).collect(),
            optimal,
        }
    }
}

/// `G - witness` is a forest and `|witness| = tau`.
pub fn verify_certificate(g: &LabeledGraph, cert: &FvsCertificate) -> Result<bool> {
    let removed = g.mask(&cert.witness)?;
    if removed.iter().filter(|&&b| b).count() != cert.tau {
        return Ok(false);
    }
    let keep: Vec<bool> = removed.iter().map(|&b| !b).collect();
    Ok(g.is_forest_mask(&keep))
}

pub fn tau_bruteforce(g: &LabeledGraph) -> Result<FvsCertificate> {
    tau_bruteforce_with_cap(g, DEFAULT_BRUTE_CAP)
}

/// Tries every vertex subset in order of increasing size (and, within a size,
/// in colexicographic order of label positions) and returns the first one
/// whose removal leaves a forest.
pub fn tau_bruteforce_with_cap(g: &LabeledGraph, cap: usize) -> Result<FvsCertificate> {
    let n = g.order();
    if n > cap || n > 30 {
        return Err(Error::TooLarge { order: n, cap });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let full: u64 = (1u64 << n) - 1;
    let acyclic_without = |removed: u64| {
        let mut uf = UnionFind::new(n);
        edges.iter().all(|&(u, v)| {
            removed >> u & 1 == 1 || removed >> v & 1 == 1 || uf.union(u, v)
        })
    };
    for k in 0..=n {
        let mut set: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        loop {
            if acyclic_without(set) {
                let members = (0..n).filter(|&v| set >> v & 1 == 1).collect();
                return Ok(FvsCertificate::from_indices(g, members, true));
            }
            if k == 0 {
                break;
            }
            // Gosper's hack: next subset of the same size
            let c = set & set.wrapping_neg();
            let r = set + c;
            set = (((r ^ set) >> 2) / c) | r;
            if set > full {
                break;
            }
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

#[derive(Debug, Clone)]
pub struct BnbOptions {
    /// Maximum number of search nodes before giving up on optimality.
    pub budget: u64,
    /// Known feedback set (labels) used as the initial incumbent.
    pub seed: Option<Vec<String>>,
}

impl Default for BnbOptions {
    fn default() -> Self {
        BnbOptions {
            budget: DEFAULT_BUDGET,
            seed: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub exhausted: bool,
}

pub fn tau_bnb(g: &LabeledGraph, options: &BnbOptions) -> Result<FvsCertificate> {
    tau_bnb_with_stats(g, options).map(|(cert, _)| cert)
}

/// Branch and bound over "delete v" / "keep v in the forest", with the
/// multigraph reductions applied at every node and two lower bounds: a
/// degree-excess bound and a greedy cycle packing.
pub fn tau_bnb_with_stats(
    g: &LabeledGraph,
    options: &BnbOptions,
) -> Result<(FvsCertificate, SearchStats)> {
    let root = SolverMultigraph::from_graph(g);
    let mut incumbent = greedy_upper_bound(&root);
    if let Some(seed) = &options.seed {
        let mask = g.mask(seed)?;
        let keep: Vec<bool> = mask.iter().map(|&b| !b).collect();
        if !g.is_forest_mask(&keep) {
            return Err(Error::Construction(
                "seed is not a feedback vertex set".to_string(),
            ));
        }
        let seed_set: Vec<usize> = (0..g.order()).filter(|&v| mask[v]).collect();
        if seed_set.len() < incumbent.len() {
            incumbent = seed_set;
        }
    }
    let mut search = Search {
        best: incumbent,
        nodes: 0,
        budget: options.budget,
        exhausted: false,
    };
    search.branch(root, Vec::new());
    let stats = SearchStats {
        nodes: search.nodes,
        exhausted: search.exhausted,
    };
    Ok((
        FvsCertificate::from_indices(g, search.best, !search.exhausted),
        stats,
    ))
}

struct Search {
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search {
    fn branch(&mut self, mut g: SolverMultigraph, mut chosen: Vec<usize>) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if g.reduce(&mut chosen) == Reduced::Infeasible {
            return;
        }
        if chosen.len() >= self.best.len() {
            return;
        }
        if g.live() == 0 {
            self.best = chosen;
            return;
        }
        let room = self.best.len() - chosen.len();
        if lower_bound(&g, room) >= room {
            return;
        }
        let Some(v) = pick_branch_vertex(&g) else {
            return;
        };

        let mut with_v = g.clone();
        with_v.remove_vertex(v);
        let mut chosen_v = chosen.clone();
        chosen_v.push(v);
        self.branch(with_v, chosen_v);

        g.mark_undeletable(v);
        self.branch(g, chosen);
    }
}

/// Deletable vertex of maximum degree, smallest label first on ties.
fn pick_branch_vertex(g: &SolverMultigraph) -> Option<usize> {
    let mut best: Option<(u32, usize)> = None;
    for v in g.vertices().filter(|&v| !g.is_undeletable(v)) {
        let d = g.degree(v);
        if best.is_none_or(|(bd, _)| d > bd) {
            best = Some((d, v));
        }
    }
    best.map(|(_, v)| v)
}

fn greedy_upper_bound(root: &SolverMultigraph) -> Vec<usize> {
    let mut g = root.clone();
    let mut chosen = Vec::new();
    loop {
        let outcome = g.reduce(&mut chosen);
        debug_assert_eq!(outcome, Reduced::Ok);
        match pick_branch_vertex(&g) {
            Some(v) => {
                g.remove_vertex(v);
                chosen.push(v);
            }
            None => return chosen,
        }
    }
}

/// Every deletion of a degree-`d` vertex lowers `|E| - |V|` by at most
/// `d - 1`, and a non-empty forest has `|E| - |V| <= -1`.
fn degree_bound(g: &SolverMultigraph) -> usize {
    let m = g.edge_count() as i64;
    let n = g.live() as i64;
    let mut target = m - n + 1;
    if target <= 0 {
        return 0;
    }
    let mut degrees: Vec<u32> = g
        .vertices()
        .filter(|&v| !g.is_undeletable(v))
        .map(|v| g.degree(v))
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let has_fixed = g.vertices().any(|v| g.is_undeletable(v));
    for (k, d) in degrees.iter().enumerate() {
        target -= *d as i64 - 1;
        if target <= 0 {
            return k + 1;
        }
    }
    if has_fixed {
        usize::MAX / 2
    } else {
        degrees.len()
    }
}

/// Greedy packing of cycles that are disjoint on their deletable vertices,
/// topped up with the degree bound of what is left. Stops early once `room`
/// is reached.
fn lower_bound(g: &SolverMultigraph, room: usize) -> usize {
    let quick = degree_bound(g);
    if quick >= room {
        return quick;
    }
    let mut h = g.clone();
    let mut count = 0usize;
    loop {
        let mut forced = Vec::new();
        if h.reduce(&mut forced) == Reduced::Infeasible {
            return usize::MAX / 2;
        }
        count += forced.len();
        if count >= room || h.live() == 0 {
            return count.max(quick);
        }
        let Some(cycle) = short_cycle(&h) else {
            break;
        };
        for v in cycle {
            if h.is_alive(v) && !h.is_undeletable(v) {
                h.remove_vertex(v);
            }
        }
        count += 1;
    }
    (count + degree_bound(&h)).max(quick)
}

/// A short cycle, preferring ones with few deletable vertices: parallel edges
/// first, then the shortest cycle found by BFS from each vertex.
fn short_cycle(g: &SolverMultigraph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        if let Some(&(u, _)) = g.neighbors(v).iter().find(|&&(u, k)| k >= 2 && u != v) {
            return Some(vec![v, u]);
        }
    }
    let cap = g.capacity();
    let mut dist = vec![usize::MAX; cap];
    let mut parent = vec![usize::MAX; cap];
    let mut best: Option<(usize, Vec<usize>)> = None;
    for root in g.vertices() {
        for v in g.vertices() {
            dist[v] = usize::MAX;
        }
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        let mut found: Option<(usize, usize)> = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &(w, _) in g.neighbors(u) {
                if w == parent[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else {
                    found = Some((u, w));
                    break 'bfs;
                }
            }
        }
        let Some((a, b)) = found else { continue };
        let cycle = bfs_cycle(&parent, &dist, a, b);
        let cost = cycle.iter().filter(|&&v| !g.is_undeletable(v)).count();
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            let done = cost <= 1 || (cost <= 3 && cycle.len() == 3);
            best = Some((cost, cycle));
            if done {
                break;
            }
        }
    }
    best.map(|(_, c)| c)
}

fn bfs_cycle(parent: &[usize], dist: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while dist[a] > dist[b] {
        left.push(a);
        a = parent[a];
    }
    while dist[b] > dist[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    left.dedup();
    left
}
