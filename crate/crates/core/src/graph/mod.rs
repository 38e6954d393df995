//! Simple undirected graphs with canonical string labels.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub(crate) mod multigraph;

/// Simple undirected graph. Vertices are kept in label order and neighbor
/// lists are sorted, so iteration and exports are deterministic.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for LabeledGraph {}

/// Builds a simple graph from declared labels and (possibly repeated) edges.
pub fn build_graph<L, E>(vertices: L, edges: E) -> Result<LabeledGraph>
where
    L: IntoIterator,
    L::Item: Into<String>,
    E: IntoIterator,
    E::Item: Into<(String, String)>,
{
    let labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
    let index: HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut indexed = Vec::new();
    for e in edges {
        let (u, v) = e.into();
        match (index.get(u.as_str()), index.get(v.as_str())) {
            (Some(&a), Some(&b)) => indexed.push((a, b)),
            _ => return Err(Error::UndeclaredEndpoint(u, v)),
        }
    }
    drop(index);
    LabeledGraph::from_indexed(labels, indexed)
}

impl LabeledGraph {
    /// Builds from labels plus edges given as positions into `labels`.
    /// Duplicate edges are merged; self-loops and duplicate labels are errors.
    pub fn from_indexed(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_unstable_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut rank = vec![0usize; labels.len()];
        for (r, &old) in order.iter().enumerate() {
            rank[old] = r;
        }
        let mut sorted = Vec::with_capacity(labels.len());
        let mut labels: Vec<Option<String>> = labels.into_iter().map(Some).collect();
        for &old in &order {
            sorted.push(labels[old].take().unwrap());
        }
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Construction(format!("duplicate vertex label {:?}", w[0])));
        }

        let mut adj = vec![Vec::new(); sorted.len()];
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(sorted[rank[a]].clone()));
            }
            let (a, b) = (rank[a], rank[b]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let index = sorted
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(LabeledGraph {
            labels: sorted,
            index,
            adj,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Resolves a set of labels to a membership mask.
    pub fn mask<S: AsRef<str>>(&self, subset: impl IntoIterator<Item = S>) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.order()];
        for l in subset {
            mask[self.require(l.as_ref())?] = true;
        }
        Ok(mask)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, label: &str) -> Result<usize> {
        Ok(self.adj[self.require(label)?].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> Result<bool> {
        let (a, b) = (self.require(u)?, self.require(v)?);
        Ok(self.adj[a].binary_search(&b).is_ok())
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in label order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_labels(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }

    /// `true` iff the subgraph induced by `subset` is acyclic.
    pub fn is_forest<S: AsRef<str>>(&self, subset: impl IntoIterator<Item = S>) -> Result<bool> {
        Ok(self.is_forest_mask(&self.mask(subset)?))
    }

    /// Acyclicity of the induced subgraph, by comparing the induced edge count
    /// with `|V| - #components`.
    pub fn is_forest_mask(&self, mask: &[bool]) -> bool {
        let mut uf = UnionFind::new(self.order());
        let mut vertices = 0usize;
        let mut edges = 0usize;
        let mut components = 0usize;
        for v in 0..self.order() {
            if mask[v] {
                vertices += 1;
                components += 1;
            }
        }
        for (u, v) in self.edges() {
            if mask[u] && mask[v] {
                edges += 1;
                if uf.union(u, v) {
                    components -= 1;
                }
            }
        }
        edges + components == vertices
    }

    /// A cycle of the induced subgraph as a vertex sequence, if there is one.
    pub fn find_cycle_mask(&self, mask: &[bool]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        for root in 0..n {
            if !mask[root] || depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !mask[v] || v == parent[u] {
                        continue;
                    }
                    if depth[v] == usize::MAX {
                        depth[v] = depth[u] + 1;
                        parent[v] = u;
                        stack.push(v);
                    } else {
                        // non-tree edge u-v closes a cycle through their common ancestor
                        return Some(tree_cycle(&parent, &depth, u, v));
                    }
                }
            }
        }
        None
    }

    pub fn find_cycle<S: AsRef<str>>(
        &self,
        subset: impl IntoIterator<Item = S>,
    ) -> Result<Option<Vec<String>>> {
        let mask = self.mask(subset)?;
        Ok(self
            .find_cycle_mask(&mask)
            .map(|c| c.into_iter().map(|v| self.labels[v].clone()).collect()))
    }

    pub fn induced<S: AsRef<str>>(&self, subset: impl IntoIterator<Item = S>) -> Result<LabeledGraph> {
        Ok(self.induced_mask(&self.mask(subset)?))
    }

    pub fn induced_mask(&self, mask: &[bool]) -> LabeledGraph {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| mask[v]).collect();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges()
            .filter(|&(u, v)| mask[u] && mask[v])
            .map(|(u, v)| (pos[u], pos[v]))
            .collect();
        LabeledGraph::from_indexed(labels, edges).expect("induced subgraph of a simple graph")
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Edges with one end in `a` and the other in `b`.
    pub fn edges_between(&self, a: &[bool], b: &[bool]) -> Vec<(usize, usize)> {
        self.edges()
            .filter(|&(u, v)| (a[u] && b[v]) || (a[v] && b[u]))
            .collect()
    }

    /// Contracts a matching given by vertex positions. Each matched pair
    /// becomes one vertex named by `merged_name(u_label, v_label)`.
    pub fn contract_matching(
        &self,
        matching: &[(usize, usize)],
        merged_name: impl Fn(&str, &str) -> String,
    ) -> Result<LabeledGraph> {
        let n = self.order();
        let mut target = vec![usize::MAX; n];
        let mut labels: Vec<String> = Vec::with_capacity(n - matching.len());
        for &(u, v) in matching {
            for w in [u, v] {
                if target[w] != usize::MAX {
                    return Err(Error::NotAMatching(self.labels[w].clone()));
                }
            }
            if u == v {
                return Err(Error::NotAMatching(self.labels[u].clone()));
            }
            target[u] = labels.len();
            target[v] = labels.len();
            labels.push(merged_name(&self.labels[u], &self.labels[v]));
        }
        for v in 0..n {
            if target[v] == usize::MAX {
                target[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let edges = self
            .edges()
            .map(|(u, v)| (target[u], target[v]))
            .filter(|(a, b)| a != b)
            .collect();
        LabeledGraph::from_indexed(labels, edges)
    }

    /// Label-based variant of [`LabeledGraph::contract_matching`].
    pub fn contract_edges<S: AsRef<str>>(
        &self,
        edges: &[(S, S)],
        merged_name: impl Fn(&str, &str) -> String,
    ) -> Result<LabeledGraph> {
        let mut matching = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            let (a, b) = (self.require(u.as_ref())?, self.require(v.as_ref())?);
            if self.adj[a].binary_search(&b).is_err() {
                return Err(Error::Construction(format!(
                    "cannot contract non-edge {}-{}",
                    u.as_ref(),
                    v.as_ref()
                )));
            }
            matching.push((a, b));
        }
        self.contract_matching(&matching, merged_name)
    }

    /// One `u<TAB>v` line per edge, sorted; isolated vertices get a line of
    /// their own so the vertex set survives a round trip.
    pub fn export_edgelist(&self) -> String {
        let mut out = String::new();
        for u in 0..self.order() {
            if self.adj[u].is_empty() {
                out.push_str(&self.labels[u]);
                out.push('\n');
            }
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                let _ = writeln!(out, "{}\t{}", self.labels[u], self.labels[v]);
            }
        }
        let mut lines: Vec<&str> = out.lines().collect();
        lines.sort_unstable();
        let mut sorted = lines.join("\n");
        if !sorted.is_empty() {
            sorted.push('\n');
        }
        sorted
    }

    pub fn parse_edgelist(text: &str) -> Result<LabeledGraph> {
        let mut labels = BTreeSet::new();
        let mut edges = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            match line.split_once('\t') {
                Some((u, v)) => {
                    labels.insert(u.to_string());
                    labels.insert(v.to_string());
                    edges.push((u.to_string(), v.to_string()));
                }
                None => {
                    labels.insert(line.to_string());
                }
            }
        }
        build_graph(labels, edges)
    }

    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  \"{}\";", escape(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                escape(&self.labels[u]),
                escape(&self.labels[v])
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

fn tree_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
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
    left
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already connected.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
