use serde_json::json;

use mct_core::closed_forms::{cylinder_thresholds, grid_thresholds, torus_thresholds, CasedPair};
use mct_core::invariants::triangle_free_thresholds;
use mct_core::{Error, Result};

use crate::source::family_graph;

/// Inclusive "A..B" range.
pub fn parse_range(text: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::InvalidInput(format!("range must be A..B, got {text:?}")))?;
    let lo = a
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range bound {a:?}")))?;
    let hi = b
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range bound {b:?}")))?;
    if lo > hi {
        return Err(Error::InvalidInput(format!("empty range {text:?}")));
    }
    Ok((lo, hi))
}

pub struct Cell {
    pub n: usize,
    pub m: usize,
    pub a1: usize,
    pub a1_prime: Option<usize>,
    pub method_a1: String,
    pub method_a1_prime: String,
}

pub struct TableRun {
    pub cells: Vec<Cell>,
    pub skipped: Vec<String>,
    pub mismatches: Vec<String>,
}

fn closed_cell(family: &str, n: usize, m: usize) -> Result<CasedPair> {
    match family {
        "torus" => torus_thresholds(n, m),
        "cylinder" => cylinder_thresholds(n, m),
        "grid" => grid_thresholds(n, m),
        other => Err(Error::InvalidInput(format!(
            "no table for family {other:?}; expected torus, cylinder or grid"
        ))),
    }
}

/// Whether the triangle-free formula engine applies to this cell (it
/// needs the graph triangle-free; only the n = 3 cycle rows fail).
fn formula_applies(family: &str, n: usize) -> bool {
    match family {
        "torus" | "cylinder" => n >= 4,
        _ => true,
    }
}

pub fn run(family: &str, n_range: (usize, usize), m_range: (usize, usize)) -> Result<TableRun> {
    let mut out = TableRun { cells: Vec::new(), skipped: Vec::new(), mismatches: Vec::new() };
    for n in n_range.0..=n_range.1 {
        for m in m_range.0..=m_range.1 {
            let pair = match closed_cell(family, n, m) {
                Ok(p) => p,
                Err(Error::InvalidInput(msg)) => {
                    out.skipped.push(format!("{n},{m}: {msg}"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let mut cell = Cell {
                n,
                m,
                a1: pair.a1.value,
                a1_prime: Some(pair.a1_prime.value),
                method_a1: "closed_form".into(),
                method_a1_prime: "closed_form".into(),
            };
            if formula_applies(family, n) {
                let g = family_graph(family, n, m)?;
                let t = triangle_free_thresholds(&g)?;
                if t.a1 != pair.a1.value {
                    out.mismatches.push(format!(
                        "{family}({n},{m}): a1 closed {} vs formula {}",
                        pair.a1.value, t.a1
                    ));
                }
                if t.a1_prime != Some(pair.a1_prime.value) {
                    out.mismatches.push(format!(
                        "{family}({n},{m}): a1' closed {} vs formula {:?}",
                        pair.a1_prime.value, t.a1_prime
                    ));
                }
                cell.method_a1 = "closed_form+formula".into();
                cell.method_a1_prime = "closed_form+formula".into();
            }
            out.cells.push(cell);
        }
    }
    Ok(out)
}

pub fn to_csv(run: &TableRun) -> String {
    let mut s = String::from("n,m,a1,a1_prime,method_a1,method_a1_prime\n");
    for c in &run.cells {
        let prime = c.a1_prime.map_or("-".to_string(), |v| v.to_string());
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.n, c.m, c.a1, prime, c.method_a1, c.method_a1_prime
        ));
    }
    s
}

pub fn to_json(run: &TableRun) -> String {
    let cells: Vec<_> = run
        .cells
        .iter()
        .map(|c| {
            json!({
                "n": c.n,
                "m": c.m,
                "a1": c.a1,
                "a1_prime": c.a1_prime,
                "method_a1": c.method_a1,
                "method_a1_prime": c.method_a1_prime,
            })
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "cells": cells })).expect("table serializes")
}
