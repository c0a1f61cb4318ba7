//! Simple undirected graphs and the concrete families under study:
//! paths, cycles, caterpillars, Cartesian products and disjoint unions.

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Immutable simple graph on vertices `0..n`, adjacency kept as
/// per-vertex bitsets. Labels are display metadata only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Summary returned by [`Graph::inspect`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inspection {
    pub max_degree: usize,
    pub is_triangle_free: bool,
    pub isolated: VertexSet,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// out-of-range endpoints and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidInput("graph must have at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidInput(format!(
                "graph order {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::empty(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::InvalidInput(format!("duplicate label {l:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Edges as ordered pairs (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Some triangle {u, v, w}, if one exists.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v <= u {
                    continue;
                }
                let common = self.adj[u].intersection(&self.adj[v]);
                let w = common.iter().find(|&w| w > v);
                if let Some(w) = w {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn inspect(&self) -> Inspection {
        Inspection {
            max_degree: self.max_degree(),
            is_triangle_free: self.is_triangle_free(),
            isolated: self.isolated_vertices(),
        }
    }

    /// Maximum degree of the subgraph induced by `keep`.
    pub fn max_degree_within(&self, keep: &VertexSet) -> usize {
        keep.iter()
            .map(|v| self.adj[v].intersection(keep).len())
            .max()
            .unwrap_or(0)
    }
}

/// Path on `n >= 1` vertices with edges {i, i+1}.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInput("a path needs at least one vertex".into()));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Caterpillar with an `m`-vertex spine and `l` pendant leaves on each
/// spine vertex. Spine vertices come first (0..m), then the leaves of
/// spine vertex i at positions m + i*l .. m + (i+1)*l.
pub fn make_caterpillar(m: usize, l: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidInput("a caterpillar needs a nonempty spine".into()));
    }
    let mut edges: Vec<_> = (0..m.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    for i in 0..m {
        for j in 0..l {
            edges.push((i, m + i * l + j));
        }
    }
    Graph::from_edges(m * (l + 1), &edges)
}

/// Cartesian product. Vertex (u, v) of the factors maps to index
/// u * n(h) + v; labels record the factor coordinates 1-based, matching
/// the usual (row, column) convention for C_n [] P_m families.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.n(), h.n());
    let idx = |u: usize, v: usize| u * nh + v;
    let mut edges = Vec::new();
    for u in 0..ng {
        for v in 0..nh {
            for u2 in g.neighbors(u).iter() {
                if u2 > u {
                    edges.push((idx(u, v), idx(u2, v)));
                }
            }
            for v2 in h.neighbors(v).iter() {
                if v2 > v {
                    edges.push((idx(u, v), idx(u, v2)));
                }
            }
        }
    }
    let coord = |g: &Graph, u: usize| match g.labels() {
        Some(ls) => ls[u].clone(),
        None => (u + 1).to_string(),
    };
    let labels = (0..ng)
        .flat_map(|u| (0..nh).map(move |v| (u, v)))
        .map(|(u, v)| format!("({},{})", coord(g, u), coord(h, v)))
        .collect();
    Graph::from_edges(ng * nh, &edges)?.with_labels(labels)
}

/// Disjoint union; vertices of `h` are shifted up by n(g).
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let shift = g.n();
    let mut edges = g.edges();
    edges.extend(h.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_edges(g.n() + h.n(), &edges)
}

/// Induced subgraph on the complement of `x`, together with the map
/// from new indices back to the original ones.
pub fn delete_vertices(g: &Graph, x: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    if let Some(v) = x.iter().find(|&v| v >= g.n()) {
        return Err(Error::InvalidInput(format!("vertex {v} not in the graph")));
    }
    let keep: Vec<usize> = (0..g.n()).filter(|v| !x.contains(*v)).collect();
    if keep.is_empty() {
        return Err(Error::InvalidInput("deletion would leave an empty graph".into()));
    }
    let mut new_of_old = vec![usize::MAX; g.n()];
    for (new, &old) in keep.iter().enumerate() {
        new_of_old[old] = new;
    }
    let mut edges = Vec::new();
    for &(u, v) in &g.edges() {
        if !x.contains(u) && !x.contains(v) {
            edges.push((new_of_old[u], new_of_old[v]));
        }
    }
    let mut sub = Graph::from_edges(keep.len(), &edges)?;
    if g.labels.is_some() {
        sub = sub.with_labels(keep.iter().map(|&v| g.label(v)).collect())?;
    }
    Ok((sub, keep))
}

/// Parses the edge-list text format: first non-comment line is the
/// vertex count, each following non-empty line is "u v" with
/// 0 <= u < v < n. Lines starting with '#' are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if n.is_none() {
            n = Some(s.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("expected vertex count, got {s:?}"),
            })?);
            continue;
        }
        let mut it = s.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u: usize = a.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex index {a:?}"),
                })?;
                let v: usize = b.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad vertex index {b:?}"),
                })?;
                (u, v)
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected \"u v\", got {s:?}"),
                })
            }
        };
        let n = n.unwrap();
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at vertex {u}") });
        }
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex index out of range in edge ({u}, {v})"),
            });
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(Error::Parse { line, msg: format!("duplicate edge ({u}, {v})") });
        }
        edges.push(e);
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })?;
    Graph::from_edges(n, &edges)
}

/// Canonical form of the edge-list format: vertex count, then sorted
/// "u v" lines with u < v.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
