//! The four graph families and their closed-form orders and sizes.
//!
//! `Ŝ_p^n` is produced by contracting the non-clique edges of `S_p^{n+1}`;
//! [`triangle_explicit`] rebuilds it from its three edge families as a cross-check.

use std::collections::BTreeSet;

use crate::addressing::{Family, Pair, TriangleVertex, Word};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// Edge of `S_p^n` as word indices, together with its recursion depth `d`
/// (`d = 1` are clique edges, `d >= 2` the non-clique ones).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct IndexedEdge {
    u: usize,
    v: usize,
    depth: usize,
}

fn pow(p: u32, e: usize) -> usize {
    (p as usize).pow(e as u32)
}

/// `{s·i·j^{d-1}, s·j·i^{d-1}}` for all `i < j`, `d ∈ [n]`, `s ∈ P^{n-d}`.
fn sierpinski_edges(p: u32, n: usize) -> Vec<IndexedEdge> {
    let mut out = Vec::new();
    for d in 1..=n {
        let block = pow(p, d);
        let tail = pow(p, d - 1);
        // value of j^{d-1} is j * (1 + p + … + p^{d-2})
        let repunit = if p == 1 { d - 1 } else { (tail - 1) / (p as usize - 1) };
        for s in 0..pow(p, n - d) {
            for i in 0..p as usize {
                for j in i + 1..p as usize {
                    out.push(IndexedEdge {
                        u: s * block + i * tail + j * repunit,
                        v: s * block + j * tail + i * repunit,
                        depth: d,
                    });
                }
            }
        }
    }
    out
}

fn word_labels(p: u32, n: usize) -> Vec<String> {
    (0..pow(p, n))
        .map(|idx| Word::from_index(idx, p, n).format(p))
        .collect()
}

/// `S_p^n`.
pub fn sierpinski(p: u32, n: usize) -> LabeledGraph {
    assert!(p >= 1, "alphabet must be non-empty");
    let edges = sierpinski_edges(p, n).into_iter().map(|e| (e.u, e.v)).collect();
    LabeledGraph::from_indexed(word_labels(p, n), edges).expect("S_p^n is simple")
}

/// `⁺S_p^n`: `S_p^n` plus an apex `w` joined to every extreme vertex.
pub fn sierpinski_plus(p: u32, n: usize) -> Result<LabeledGraph> {
    if n == 0 || p == 0 {
        return Err(Error::Unsupported("⁺S needs p >= 1 and n >= 1".into()));
    }
    let mut labels = word_labels(p, n);
    let apex = labels.len();
    labels.push("w".to_string());
    let mut edges: Vec<(usize, usize)> =
        sierpinski_edges(p, n).into_iter().map(|e| (e.u, e.v)).collect();
    for i in 0..p {
        edges.push((apex, Word::repeat(i, n).index(p)));
    }
    LabeledGraph::from_indexed(labels, edges)
}

/// `⁺⁺S_p^n`: `S_p^n` plus a copy of `S_p^{n-1}` prefixed by the new symbol
/// `p`, with `p·i^{n-1}` joined to `i^n`.
pub fn sierpinski_plusplus(p: u32, n: usize) -> Result<LabeledGraph> {
    if n == 0 || p == 0 {
        return Err(Error::Unsupported("⁺⁺S needs p >= 1 and n >= 1".into()));
    }
    let mut labels = word_labels(p, n);
    let offset = labels.len();
    labels.extend(
        (0..pow(p, n - 1)).map(|idx| format!("{p}:{}", Word::from_index(idx, p, n - 1).format(p))),
    );
    let mut edges: Vec<(usize, usize)> =
        sierpinski_edges(p, n).into_iter().map(|e| (e.u, e.v)).collect();
    edges.extend(
        sierpinski_edges(p, n - 1)
            .into_iter()
            .map(|e| (offset + e.u, offset + e.v)),
    );
    for i in 0..p {
        edges.push((
            offset + Word::repeat(i, n - 1).index(p),
            Word::repeat(i, n).index(p),
        ));
    }
    LabeledGraph::from_indexed(labels, edges)
}

/// Non-clique edges of `S_p^m`, i.e. those of depth `d >= 2`.
pub fn nonclique_edges(p: u32, m: usize) -> Vec<(Word, Word)> {
    sierpinski_edges(p, m)
        .into_iter()
        .filter(|e| e.depth >= 2)
        .map(|e| (Word::from_index(e.u, p, m), Word::from_index(e.v, p, m)))
        .collect()
}

/// Image in `Ŝ_p^{m-1}` of a vertex of `S_p^m`: extreme words become corners,
/// any other word `s·i·j^l` becomes `s{i,j}`.
pub fn triangle_image(w: &Word) -> TriangleVertex {
    let sym = w.symbols();
    let last = *sym.last().expect("non-empty word");
    let run = sym.iter().rev().take_while(|&&x| x == last).count();
    if run == sym.len() {
        return TriangleVertex::Hat(last);
    }
    let before = sym[sym.len() - run - 1];
    TriangleVertex::Contracted {
        prefix: Word::from_symbols(sym[..sym.len() - run - 1].to_vec()),
        pair: Pair::of(before, last),
    }
}

/// `Ŝ_p^n`, by contracting every non-clique edge of `S_p^{n+1}`.
pub fn triangle(p: u32, n: usize) -> LabeledGraph {
    let s = sierpinski(p, n + 1);
    let word_of = |label: &str| -> Word {
        if p > 10 {
            Word::from_symbols(label.split(',').map(|x| x.parse().unwrap()).collect())
        } else {
            Word::from_digits(label)
        }
    };
    let matching: Vec<(usize, usize)> = sierpinski_edges(p, n + 1)
        .into_iter()
        .filter(|e| e.depth >= 2)
        .map(|e| {
            let u = Word::from_index(e.u, p, n + 1).format(p);
            let v = Word::from_index(e.v, p, n + 1).format(p);
            (s.index_of(&u).unwrap(), s.index_of(&v).unwrap())
        })
        .collect();
    let contracted = s
        .contract_matching(&matching, |u, v| {
            let name = triangle_image(&word_of(u));
            debug_assert_eq!(name, triangle_image(&word_of(v)));
            name.format(p)
        })
        .expect("non-clique edges form a matching");
    debug_assert_eq!(contracted.size(), s.size() - matching.len());
    // the only untouched vertices are the extreme words
    let labels: Vec<String> = contracted
        .labels()
        .iter()
        .map(|l| {
            if l.contains('{') {
                l.clone()
            } else {
                triangle_image(&word_of(l)).format(p)
            }
        })
        .collect();
    let edges = contracted.edges().collect();
    LabeledGraph::from_indexed(labels, edges).expect("relabeling keeps labels distinct")
}

/// All vertices of `Ŝ_p^n`: corners first, then contracted pairs by prefix length.
pub fn triangle_vertices(p: u32, n: usize) -> Vec<TriangleVertex> {
    let mut out: Vec<TriangleVertex> = (0..p).map(TriangleVertex::Hat).collect();
    for len in 0..n {
        for idx in 0..pow(p, len) {
            let prefix = Word::from_index(idx, p, len);
            for i in 0..p {
                for j in i + 1..p {
                    out.push(TriangleVertex::contracted(prefix.clone(), i, j));
                }
            }
        }
    }
    out
}

/// `Ŝ_p^n` from the explicit description: corner edges, bottom-clique edges
/// between pairs sharing a symbol, and edges from bottom-level pairs up to the
/// coarser pair they touch.
pub fn triangle_explicit(p: u32, n: usize) -> LabeledGraph {
    let labels: Vec<String> = triangle_vertices(p, n).iter().map(|v| v.format(p)).collect();
    let mut edges: BTreeSet<(String, String)> = BTreeSet::new();
    let mut add = |a: TriangleVertex, b: TriangleVertex| {
        let (a, b) = (a.format(p), b.format(p));
        edges.insert(if a < b { (a, b) } else { (b, a) });
    };
    if n == 0 {
        for i in 0..p {
            for j in i + 1..p {
                add(TriangleVertex::Hat(i), TriangleVertex::Hat(j));
            }
        }
    } else {
        let m = n - 1;
        // {ĥk, k^m{j,k}}
        for k in 0..p {
            for j in (0..p).filter(|&j| j != k) {
                add(
                    TriangleVertex::Hat(k),
                    TriangleVertex::contracted(Word::repeat(k, m), j, k),
                );
            }
        }
        // {s{i,j}, s{i,k}} for s ∈ P^m and {j,k} ⊂ P∖{i}
        for idx in 0..pow(p, m) {
            let s = Word::from_index(idx, p, m);
            for i in 0..p {
                for j in (0..p).filter(|&j| j != i) {
                    for k in (j + 1..p).filter(|&k| k != i) {
                        add(
                            TriangleVertex::contracted(s.clone(), i, j),
                            TriangleVertex::contracted(s.clone(), i, k),
                        );
                    }
                }
            }
        }
        // {s·k·i^{m-v}{i,j}, s{i,k}} for s ∈ P^{v-1}, v ∈ [m], j,k ∈ P∖{i}
        for v in 1..=m {
            for idx in 0..pow(p, v - 1) {
                let s = Word::from_index(idx, p, v - 1);
                for i in 0..p {
                    for k in (0..p).filter(|&k| k != i) {
                        let deep = s.push(k).concat(&Word::repeat(i, m - v));
                        for j in (0..p).filter(|&j| j != i) {
                            add(
                                TriangleVertex::contracted(deep.clone(), i, j),
                                TriangleVertex::contracted(s.clone(), i, k),
                            );
                        }
                    }
                }
            }
        }
    }
    let graph_edges: Vec<(String, String)> = edges.into_iter().collect();
    crate::graph::build_graph(labels, graph_edges).expect("explicit Ŝ is simple")
}

/// Edges present in exactly one of the two graphs, `(only_left, only_right)`.
pub fn edge_difference(
    left: &LabeledGraph,
    right: &LabeledGraph,
) -> (Vec<(String, String)>, Vec<(String, String)>) {
    let a = left.edge_labels();
    let b = right.edge_labels();
    (
        a.difference(&b).cloned().collect(),
        b.difference(&a).cloned().collect(),
    )
}

/// Builds any family member. `⁺S`/`⁺⁺S` need `n >= 1`.
pub fn generate(family: Family, p: u32, n: usize) -> Result<LabeledGraph> {
    if p == 0 {
        return Err(Error::Unsupported("p must be at least 1".into()));
    }
    match family {
        Family::S => Ok(sierpinski(p, n)),
        Family::Plus => sierpinski_plus(p, n),
        Family::PlusPlus => sierpinski_plusplus(p, n),
        Family::Hat => Ok(triangle(p, n)),
    }
}

pub fn expected_order(family: Family, p: u32, n: usize) -> u64 {
    let p = p as u64;
    let pn = p.pow(n as u32);
    match family {
        Family::S => pn,
        Family::Plus => pn + 1,
        Family::PlusPlus => (p + 1) * p.pow(n.saturating_sub(1) as u32),
        Family::Hat => p * (pn + 1) / 2,
    }
}

pub fn expected_size(family: Family, p: u32, n: usize) -> u64 {
    let p = p as u64;
    let pn = p.pow(n as u32);
    match family {
        Family::S => p * (pn - 1) / 2,
        Family::Plus => p * (pn + 1) / 2,
        Family::PlusPlus => (p + 1) * pn / 2,
        Family::Hat => (p - 1) * pn * p / 2,
    }
}
