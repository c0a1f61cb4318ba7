//! Hypergraphs, clique hypergraphs, and transversal dualization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default cap on the number of intermediate transversals kept during
/// dualization before giving up with a resource error.
pub const DEFAULT_DUALIZATION_CAP: usize = 1_000_000;

/// Set system over vertices `0..n` with nonempty hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        for e in &edges {
            if e.is_empty() {
                return Err(Error::InvalidInput("empty hyperedge".into()));
            }
            if let Some(v) = e.iter().find(|&v| v >= n) {
                return Err(Error::InvalidInput(format!(
                    "hyperedge member {v} out of range 0..{n}"
                )));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// True if no hyperedge is contained in a different one and there
    /// are no duplicates.
    pub fn is_simple(&self) -> bool {
        for (i, e) in self.edges.iter().enumerate() {
            for (j, f) in self.edges.iter().enumerate() {
                if i != j && e.is_subset(f) {
                    return false;
                }
            }
        }
        true
    }

    /// Maximum number of hyperedges incident to a single vertex.
    pub fn max_vertex_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.edges.iter().filter(|e| e.contains(v)).count())
            .max()
            .unwrap_or(0)
    }

    pub fn has_singleton(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    pub fn to_json(&self) -> String {
        let j = HypergraphJson {
            n: self.n,
            edges: self.edges.iter().map(|e| e.to_vec()).collect(),
        };
        serde_json::to_string(&j).expect("hypergraph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Hypergraph> {
        let j: HypergraphJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        for e in &j.edges {
            if !e.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(
                    "hyperedge member lists must be strictly increasing".into(),
                ));
            }
        }
        Hypergraph::new(j.n, j.edges.into_iter().map(|e| e.into_iter().collect()).collect())
    }
}

fn sort_edges(edges: &mut [VertexSet]) {
    edges.sort_by(|a, b| a.lex_cmp(b));
}

/// Removes duplicate and superset hyperedges and sorts the result so
/// the output does not depend on input order.
pub fn simplify(h: &Hypergraph) -> Result<Hypergraph> {
    let mut kept: Vec<VertexSet> = Vec::new();
    for e in h.edges() {
        if kept.iter().any(|f| f.is_subset(e)) {
            continue;
        }
        kept.retain(|f| !e.is_subset(f));
        kept.push(*e);
    }
    sort_edges(&mut kept);
    Hypergraph::new(h.n(), kept)
}

/// The clique hypergraph of `g`: one hyperedge per maximal clique,
/// enumerated by Bron-Kerbosch with pivoting. Isolated vertices give
/// singleton hyperedges; the output is simple and canonically sorted.
pub fn clique_hypergraph(g: &Graph) -> Hypergraph {
    let mut cliques = Vec::new();
    let all = VertexSet::full(g.n());
    bron_kerbosch(g, VertexSet::empty(), all, VertexSet::empty(), &mut cliques);
    sort_edges(&mut cliques);
    Hypergraph::new(g.n(), cliques).expect("maximal cliques are nonempty and in range")
}

fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    // pivot: vertex of p union x with the most neighbors in p
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(&p).len())
        .expect("p union x nonempty here");
    let candidates = p.difference(g.neighbors(pivot));
    let mut p = p;
    let mut x = x;
    for v in candidates.iter() {
        let nv = g.neighbors(v);
        let mut r2 = r;
        r2.insert(v);
        bron_kerbosch(g, r2, p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// True iff `s` meets every hyperedge of `h`.
pub fn is_transversal(h: &Hypergraph, s: &VertexSet) -> bool {
    h.edges().iter().all(|e| e.intersects(s))
}

/// All inclusion-minimal transversals of a simple hypergraph, computed
/// by the sequential edge-by-edge (Berge) method with minimality
/// filtering after each step. `cap` bounds the intermediate family.
pub fn transversal_hypergraph_capped(h: &Hypergraph, cap: usize) -> Result<Hypergraph> {
    if !h.is_simple() {
        return Err(Error::InvalidInput(
            "transversal hypergraph requires a simple input; call simplify first".into(),
        ));
    }
    if h.edges().is_empty() {
        return Err(Error::InvalidInput(
            "transversal hypergraph of an edgeless hypergraph is undefined".into(),
        ));
    }
    let mut trans: Vec<VertexSet> = vec![VertexSet::empty()];
    for e in h.edges() {
        let mut next: Vec<VertexSet> = Vec::new();
        for t in &trans {
            if t.intersects(e) {
                push_minimal(&mut next, *t);
            } else {
                for v in e.iter() {
                    let mut t2 = *t;
                    t2.insert(v);
                    push_minimal(&mut next, t2);
                }
            }
            if next.len() > cap {
                return Err(Error::Resource(format!(
                    "dualization exceeded {cap} intermediate transversals"
                )));
            }
        }
        trans = next;
    }
    sort_edges(&mut trans);
    Hypergraph::new(h.n(), trans)
}

pub fn transversal_hypergraph(h: &Hypergraph) -> Result<Hypergraph> {
    transversal_hypergraph_capped(h, DEFAULT_DUALIZATION_CAP)
}

fn push_minimal(family: &mut Vec<VertexSet>, s: VertexSet) {
    if family.iter().any(|f| f.is_subset(&s)) {
        return;
    }
    family.retain(|f| !s.is_subset(f));
    family.push(s);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, make_cycle, make_path};

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn clique_hypergraph_triangle_free_is_edge_set() {
        let c5 = make_cycle(5).unwrap();
        let h = clique_hypergraph(&c5);
        let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        let mut expect: Vec<Vec<usize>> =
            c5.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
        expect.sort();
        assert_eq!(edges, expect);
    }

    #[test]
    fn clique_hypergraph_c3_c4() {
        // 4 row triangles plus 12 edges from the C4 layers; every
        // vertex lies in exactly 3 cliques
        let g = cartesian_product(&make_cycle(3).unwrap(), &make_cycle(4).unwrap()).unwrap();
        let h = clique_hypergraph(&g);
        assert_eq!(h.edges().len(), 16);
        assert_eq!(h.edges().iter().filter(|e| e.len() == 3).count(), 4);
        for v in 0..12 {
            assert_eq!(h.edges().iter().filter(|e| e.contains(v)).count(), 3);
        }
        assert_eq!(h.max_vertex_degree(), 3);
    }

    #[test]
    fn clique_hypergraph_c3_c3() {
        // frozen from the brute-force maximal-complete-subset scan in
        // tests/properties.rs: 6 triangles, each vertex in exactly 2
        let g = cartesian_product(&make_cycle(3).unwrap(), &make_cycle(3).unwrap()).unwrap();
        let h = clique_hypergraph(&g);
        assert_eq!(h.edges().len(), 6);
        assert!(h.edges().iter().all(|e| e.len() == 3));
        for v in 0..9 {
            assert_eq!(h.edges().iter().filter(|e| e.contains(v)).count(), 2);
        }
        assert_eq!(h.max_vertex_degree(), 2);
    }

    #[test]
    fn isolated_vertex_gives_singleton() {
        let k1 = make_path(1).unwrap();
        let h = clique_hypergraph(&k1);
        assert_eq!(h.edges().len(), 1);
        assert_eq!(h.edges()[0].to_vec(), vec![0]);
    }

    #[test]
    fn simplify_cases() {
        let h = hg(4, &[&[1, 2], &[1, 2, 3]]);
        let s = simplify(&h).unwrap();
        assert_eq!(s.edges().len(), 1);
        assert_eq!(s.edges()[0].to_vec(), vec![1, 2]);
        assert_eq!(simplify(&s).unwrap(), s);
        assert!(s.is_simple());
    }

    #[test]
    fn transversal_single_edge() {
        let h = hg(2, &[&[0, 1]]);
        let t = transversal_hypergraph(&h).unwrap();
        let edges: Vec<Vec<usize>> = t.edges().iter().map(|e| e.to_vec()).collect();
        assert_eq!(edges, vec![vec![0], vec![1]]);
    }

    #[test]
    fn transversal_c3_self_dual() {
        let h = hg(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let t = transversal_hypergraph(&h).unwrap();
        assert_eq!(t, simplify(&h).unwrap());
    }

    #[test]
    fn transversal_involution() {
        let h = hg(5, &[&[0, 1, 2], &[2, 3], &[3, 4]]);
        let t = transversal_hypergraph(&h).unwrap();
        let tt = transversal_hypergraph(&t).unwrap();
        assert_eq!(tt, simplify(&h).unwrap());
    }

    #[test]
    fn transversal_cap_is_enforced() {
        // n disjoint pairs have 2^n minimal transversals
        let edges: Vec<Vec<usize>> = (0..10).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let h = hg(20, &edges.iter().map(|e| e.as_slice()).collect::<Vec<_>>());
        assert!(matches!(
            transversal_hypergraph_capped(&h, 100),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn is_transversal_cases() {
        let h = hg(3, &[&[0, 1], &[0, 2]]);
        assert!(is_transversal(&h, &VertexSet::full(3)));
        assert!(is_transversal(&h, &VertexSet::singleton(0)));
        assert!(!is_transversal(&h, &VertexSet::singleton(1)));
        assert!(!is_transversal(&h, &VertexSet::empty()));
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert!(is_transversal(&empty, &VertexSet::empty()));
    }

    #[test]
    fn hyperdegree_singleton() {
        let h = hg(1, &[&[0]]);
        assert_eq!(h.max_vertex_degree(), 1);
    }

    #[test]
    fn json_round_trip() {
        let h = hg(4, &[&[0, 2], &[1, 2, 3]]);
        let j = h.to_json();
        assert_eq!(Hypergraph::from_json(&j).unwrap(), h);
        assert!(Hypergraph::from_json("{\"n\":2,\"edges\":[[1,0]]}").is_err());
    }
}
