//! Independent brute-force oracles: everything here is plain subset
//! enumeration, deliberately sharing no code with the engines under
//! test.

#![allow(dead_code)]

use mct_core::{Graph, Hypergraph, VertexSet};

/// All subsets of {0, .., n-1}, n <= 20.
pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= 20);
    (0u32..1 << n).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

pub fn brute_alpha_k(g: &Graph, k: usize) -> usize {
    subsets(g.n())
        .filter(|s| g.max_degree_within(s) <= k)
        .map(|s| s.len())
        .max()
        .unwrap()
}

fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    let vs = s.to_vec();
    vs.iter()
        .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
}

pub fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = subsets(g.n())
        .filter(|s| {
            !s.is_empty()
                && is_clique(g, s)
                && (0..g.n()).all(|v| {
                    s.contains(v) || !s.iter().all(|u| g.has_edge(u, v))
                })
        })
        .map(|s| s.to_vec())
        .collect();
    out.sort();
    out
}

pub fn brute_minimal_transversals(h: &Hypergraph) -> Vec<Vec<usize>> {
    let hits = |s: &VertexSet| h.edges().iter().all(|e| e.intersects(s));
    let mut out: Vec<Vec<usize>> = subsets(h.n())
        .filter(|s| {
            hits(s)
                && s.iter().all(|v| {
                    let mut smaller = *s;
                    smaller.remove(v);
                    !hits(&smaller)
                })
        })
        .map(|s| s.to_vec())
        .collect();
    out.sort();
    out
}

/// min over all X of max(|X|, max degree of G - X), clamped to >= 1;
/// the brute-force value of the deletion formula.
pub fn brute_deletion_formula(g: &Graph) -> usize {
    subsets(g.n())
        .map(|x| x.len().max(g.max_degree_within(&x.complement(g.n()))))
        .min()
        .unwrap()
        .max(1)
}

/// min over k of max(k, isolates + n - alpha_k), clamped to >= 1.
pub fn brute_alpha_formula(g: &Graph) -> usize {
    let iso = g.isolated_vertices().len();
    (0..=g.max_degree())
        .map(|k| k.max(iso + g.n() - brute_alpha_k(g, k)))
        .min()
        .unwrap()
        .max(1)
}

pub fn brute_domination_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|d| {
            let mut covered = *d;
            for v in d.iter() {
                covered = covered.union(g.neighbors(v));
            }
            covered.len() == g.n()
        })
        .map(|d| d.len())
        .min()
        .unwrap()
}

/// Sorted edge list of a hypergraph, for order-insensitive comparison.
pub fn edge_sets(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
    out.sort();
    out
}
