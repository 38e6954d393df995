//! Working multigraph for the exact solver. Parallel edges and self-loops are
//! meaningful here: a self-loop forces its vertex into the feedback set and a
//! parallel pair is a 2-cycle.

use super::LabeledGraph;

#[derive(Debug, Clone)]
pub(crate) struct SolverMultigraph {
    alive: Vec<bool>,
    /// Vertices already committed to the forest side. Adjacent undeletable
    /// vertices are merged, so they form an independent set.
    undeletable: Vec<bool>,
    /// Neighbor -> multiplicity. A self-loop is stored under the vertex itself.
    adj: Vec<Vec<(usize, u32)>>,
    live: usize,
}

/// Outcome of exhaustive reduction.
#[derive(Debug, PartialEq, Eq)]
pub(crate) enum Reduced {
    Ok,
    Infeasible,
}

impl SolverMultigraph {
    pub fn from_graph(g: &LabeledGraph) -> Self {
        let adj = (0..g.order())
            .map(|v| g.neighbors(v).iter().map(|&u| (u, 1)).collect())
            .collect();
        SolverMultigraph {
            alive: vec![true; g.order()],
            undeletable: vec![false; g.order()],
            adj,
            live: g.order(),
        }
    }

    /// Builds from an explicit edge multiset; used by the reduction tests.
    #[cfg(test)]
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SolverMultigraph {
            alive: vec![true; n],
            undeletable: vec![false; n],
            adj: vec![Vec::new(); n],
            live: n,
        };
        for &(a, b) in edges {
            g.add_edge(a, b, 1);
        }
        g
    }

    pub fn live(&self) -> usize {
        self.live
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn is_undeletable(&self, v: usize) -> bool {
        self.undeletable[v]
    }

    pub fn capacity(&self) -> usize {
        self.alive.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(move |&v| self.alive[v])
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, u32)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v]
            .iter()
            .map(|&(u, k)| if u == v { 2 * k } else { k })
            .sum()
    }

    pub fn edge_count(&self) -> u64 {
        let mut twice = 0u64;
        for v in self.vertices() {
            twice += self.degree(v) as u64;
        }
        twice / 2
    }

    fn multiplicity(&self, a: usize, b: usize) -> u32 {
        self.adj[a]
            .iter()
            .find(|&&(u, _)| u == b)
            .map_or(0, |&(_, k)| k)
    }

    fn bump(&mut self, a: usize, b: usize, k: u32) {
        match self.adj[a].iter_mut().find(|(u, _)| *u == b) {
            Some(entry) => entry.1 += k,
            None => self.adj[a].push((b, k)),
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize, k: u32) {
        self.bump(a, b, k);
        if a != b {
            self.bump(b, a, k);
        }
    }

    pub fn remove_vertex(&mut self, v: usize) {
        debug_assert!(self.alive[v]);
        let nbrs = std::mem::take(&mut self.adj[v]);
        for (u, _) in nbrs {
            if u != v {
                self.adj[u].retain(|&(w, _)| w != v);
            }
        }
        self.alive[v] = false;
        self.live -= 1;
    }

    /// Commits `v` to the forest side.
    pub fn mark_undeletable(&mut self, v: usize) {
        self.undeletable[v] = true;
    }

    /// Merges undeletable `b` into undeletable `a`. One copy of the `a-b` edge
    /// becomes a tree edge; further copies turn into self-loops on `a`.
    fn merge(&mut self, a: usize, b: usize) {
        let between = self.multiplicity(a, b);
        let nbrs = std::mem::take(&mut self.adj[b]);
        self.adj[a].retain(|&(w, _)| w != b);
        for (u, k) in nbrs {
            if u == a {
                continue;
            }
            if u == b {
                self.add_edge(a, a, k);
                continue;
            }
            self.adj[u].retain(|&(w, _)| w != b);
            self.add_edge(a, u, k);
        }
        if between > 1 {
            self.add_edge(a, a, between - 1);
        }
        self.alive[b] = false;
        self.live -= 1;
    }

    /// Applies the safe reduction rules until none fires. Forced feedback
    /// vertices are appended to `forced`.
    pub fn reduce(&mut self, forced: &mut Vec<usize>) -> Reduced {
        let mut queue: Vec<usize> = self.vertices().collect();
        let mut queued = vec![false; self.alive.len()];
        for &v in &queue {
            queued[v] = true;
        }
        queue.reverse();
        while let Some(v) = queue.pop() {
            queued[v] = false;
            if !self.alive[v] {
                continue;
            }
            let touched: Vec<usize> = self.adj[v].iter().map(|&(u, _)| u).collect();
            match self.reduce_at(v, forced) {
                Step::Infeasible => return Reduced::Infeasible,
                Step::None => continue,
                Step::Changed(extra) => {
                    for u in touched.into_iter().chain(extra).chain(std::iter::once(v)) {
                        if u < self.alive.len() && self.alive[u] && !queued[u] {
                            queued[u] = true;
                            queue.push(u);
                        }
                    }
                }
            }
        }
        Reduced::Ok
    }

    fn reduce_at(&mut self, v: usize, forced: &mut Vec<usize>) -> Step {
        let loops = self.multiplicity(v, v);
        if loops > 0 {
            if self.undeletable[v] {
                return Step::Infeasible;
            }
            forced.push(v);
            self.remove_vertex(v);
            return Step::Changed(vec![]);
        }
        let deg = self.degree(v);
        if deg <= 1 {
            self.remove_vertex(v);
            return Step::Changed(vec![]);
        }
        if self.undeletable[v] {
            if let Some(&(u, _)) = self.adj[v].iter().find(|&&(u, _)| self.undeletable[u]) {
                let (keep, gone) = (v.min(u), v.max(u));
                self.merge(keep, gone);
                let extra = self.adj[keep].iter().map(|&(w, _)| w).collect();
                return Step::Changed(extra);
            }
        } else if self
            .adj[v]
            .iter()
            .any(|&(u, k)| k >= 2 && self.undeletable[u])
        {
            forced.push(v);
            self.remove_vertex(v);
            return Step::Changed(vec![]);
        }
        if deg == 2 {
            if self.adj[v].len() == 1 {
                // 2-cycle with the only neighbor
                let u = self.adj[v][0].0;
                let victim = if self.undeletable[u] { v } else { u };
                if self.undeletable[victim] {
                    return Step::Infeasible;
                }
                forced.push(victim);
                self.remove_vertex(victim);
                return Step::Changed(vec![]);
            }
            let (a, b) = (self.adj[v][0].0, self.adj[v][1].0);
            if self.undeletable[v] || !self.undeletable[a] || !self.undeletable[b] {
                self.remove_vertex(v);
                self.add_edge(a, b, 1);
                return Step::Changed(vec![a, b]);
            }
        }
        Step::None
    }
}

enum Step {
    None,
    Changed(Vec<usize>),
    Infeasible,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_reduces_to_one_forced_vertex() {
        let mut g = SolverMultigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let mut forced = Vec::new();
        assert_eq!(g.reduce(&mut forced), Reduced::Ok);
        assert_eq!(forced.len(), 1);
        assert_eq!(g.live(), 0);
    }

    #[test]
    fn tree_vanishes() {
        let mut g = SolverMultigraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
        let mut forced = Vec::new();
        assert_eq!(g.reduce(&mut forced), Reduced::Ok);
        assert!(forced.is_empty());
        assert_eq!(g.live(), 0);
    }

    #[test]
    fn undeletable_cycle_is_infeasible() {
        let mut g = SolverMultigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        for v in 0..3 {
            g.mark_undeletable(v);
        }
        assert_eq!(g.reduce(&mut Vec::new()), Reduced::Infeasible);
    }

    #[test]
    fn double_edge_to_undeletable_forces() {
        // K4 with 0 and 1 kept: after merging, 2 and 3 each see it twice
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut g = SolverMultigraph::from_edges(4, &edges);
        g.mark_undeletable(0);
        g.mark_undeletable(1);
        let mut forced = Vec::new();
        assert_eq!(g.reduce(&mut forced), Reduced::Ok);
        forced.sort();
        assert_eq!(forced, vec![2, 3]);
    }
}
