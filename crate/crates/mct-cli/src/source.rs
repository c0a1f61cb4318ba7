use std::fs;

use clap::Args;

use mct_core::graph::{
    cartesian_product, make_caterpillar, make_cycle, make_path, parse_edge_list, Graph,
};
use mct_core::{Error, Result};

/// Where the input graph comes from: a named product/caterpillar
/// family or an edge-list file.
#[derive(Args, Debug)]
pub struct GraphSource {
    /// Family instance: NAME N M with NAME one of torus, cylinder,
    /// grid, caterpillar
    #[arg(long, num_args = 3, value_names = ["NAME", "N", "M"], conflicts_with = "edge_list")]
    pub family: Option<Vec<String>>,

    /// Path to an edge-list file (first line n, then "u v" lines)
    #[arg(long)]
    pub edge_list: Option<String>,
}

/// A resolved input: the graph plus a printable description and, when
/// it came from a family, the family coordinates.
pub struct ResolvedGraph {
    pub graph: Graph,
    pub describe: String,
    pub family: Option<(String, usize, usize)>,
}

pub fn family_graph(name: &str, n: usize, m: usize) -> Result<Graph> {
    match name {
        "torus" => cartesian_product(&make_cycle(n)?, &make_cycle(m)?),
        "cylinder" => cartesian_product(&make_cycle(n)?, &make_path(m)?),
        "grid" => cartesian_product(&make_path(n)?, &make_path(m)?),
        "caterpillar" => make_caterpillar(n, m),
        other => Err(Error::InvalidInput(format!(
            "unknown family {other:?}; expected torus, cylinder, grid or caterpillar"
        ))),
    }
}

impl GraphSource {
    pub fn resolve(&self) -> Result<ResolvedGraph> {
        if let Some(parts) = &self.family {
            let name = parts[0].as_str();
            let n: usize = parts[1]
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad family size {:?}", parts[1])))?;
            let m: usize = parts[2]
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad family size {:?}", parts[2])))?;
            return Ok(ResolvedGraph {
                graph: family_graph(name, n, m)?,
                describe: format!("{name}({n},{m})"),
                family: Some((name.to_string(), n, m)),
            });
        }
        if let Some(path) = &self.edge_list {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            return Ok(ResolvedGraph {
                graph: parse_edge_list(&text)?,
                describe: path.clone(),
                family: None,
            });
        }
        Err(Error::InvalidInput(
            "no graph given; use --family NAME N M or --edge-list PATH".into(),
        ))
    }
}

/// Search budget: the --budget flag, else SOLVER_BUDGET, else the
/// library default.
pub fn budget(flag: Option<u64>, default: u64) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("SOLVER_BUDGET") {
        Ok(text) => text.parse().map_err(|_| {
            Error::InvalidInput(format!("SOLVER_BUDGET must be an integer, got {text:?}"))
        }),
        Err(_) => Ok(default),
    }
}
