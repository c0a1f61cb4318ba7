use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which labeled graphs on n vertices to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    All,
    TriangleFree,
    IsolateFree,
    TriangleFreeIsolateFree,
}

const MAX_ENUM_VERTICES: usize = 7;

/// Iterates every labeled simple graph on n vertices (n <= 7) in the
/// given class, by edge-subset mask over the n(n-1)/2 vertex pairs.
pub fn labeled_graphs(n: usize, class: GraphClass) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::Resource(format!(
            "labeled enumeration capped at {MAX_ENUM_VERTICES} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("enumerated edges are valid");
        let keep = match class {
            GraphClass::All => true,
            GraphClass::TriangleFree => g.is_triangle_free(),
            GraphClass::IsolateFree => g.isolated_vertices().is_empty(),
            GraphClass::TriangleFreeIsolateFree => {
                g.is_triangle_free() && g.isolated_vertices().is_empty()
            }
        };
        keep.then_some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_on_three_vertices() {
        assert_eq!(labeled_graphs(3, GraphClass::All).unwrap().count(), 8);
        // only the full triangle is excluded
        assert_eq!(labeled_graphs(3, GraphClass::TriangleFree).unwrap().count(), 7);
        // isolate-free on 3 vertices: P3 (3 labelings) and K3
        assert_eq!(labeled_graphs(3, GraphClass::IsolateFree).unwrap().count(), 4);
        assert_eq!(
            labeled_graphs(3, GraphClass::TriangleFreeIsolateFree).unwrap().count(),
            3
        );
    }

    #[test]
    fn counts_on_four_vertices() {
        assert_eq!(labeled_graphs(4, GraphClass::All).unwrap().count(), 64);
        // A006785-style labeled count: 41 triangle-free labeled graphs on 4 vertices
        assert_eq!(labeled_graphs(4, GraphClass::TriangleFree).unwrap().count(), 41);
    }

    #[test]
    fn cap_enforced() {
        assert!(labeled_graphs(8, GraphClass::All).is_err());
    }
}
