use clap::ValueEnum;
use serde_json::json;

use mct_core::closed_forms::{
    caterpillar_a1, cylinder_thresholds, grid_thresholds, torus_thresholds, CasedValue,
};
use mct_core::game::{threshold_exact_budgeted, Player};
use mct_core::invariants::triangle_free_thresholds;
use mct_core::{Error, Result};

use crate::source::ResolvedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Formula,
    Closed,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Start {
    Alice,
    Bob,
}

impl Start {
    pub fn player(self) -> Player {
        match self {
            Start::Alice => Player::Alice,
            Start::Bob => Player::Bob,
        }
    }
}

/// One computed threshold with its provenance.
pub struct Computed {
    pub value: Option<usize>,
    pub method: &'static str,
    pub case: Option<&'static str>,
    pub note: Option<String>,
}

fn closed_pair(name: &str, n: usize, m: usize) -> Result<(CasedValue, Option<CasedValue>)> {
    match name {
        "torus" => torus_thresholds(n, m).map(|p| (p.a1, Some(p.a1_prime))),
        "cylinder" => cylinder_thresholds(n, m).map(|p| (p.a1, Some(p.a1_prime))),
        "grid" => grid_thresholds(n, m).map(|p| (p.a1, Some(p.a1_prime))),
        "caterpillar" => caterpillar_a1(n, m).map(|v| (v, None)),
        other => Err(Error::Unsupported(format!("no closed forms for family {other:?}"))),
    }
}

pub fn closed_value(src: &ResolvedGraph, l: usize, start: Start) -> Result<Computed> {
    if l != 1 {
        return Err(Error::Unsupported("closed forms cover l = 1 only".into()));
    }
    let (name, n, m) = src
        .family
        .as_ref()
        .ok_or_else(|| Error::Unsupported("closed forms need a --family input".into()))?;
    let (a1, a1_prime) = closed_pair(name, *n, *m)?;
    let v = match start {
        Start::Alice => a1,
        Start::Bob => a1_prime.ok_or_else(|| {
            Error::Unsupported(format!("no closed form for the Bob-start threshold of {name}"))
        })?,
    };
    Ok(Computed {
        value: Some(v.value),
        method: "closed_form",
        case: Some(v.case),
        note: None,
    })
}

pub fn formula_value(src: &ResolvedGraph, l: usize, start: Start) -> Result<Computed> {
    if l != 1 {
        return Err(Error::Unsupported("threshold formulas cover l = 1 only".into()));
    }
    let pair = triangle_free_thresholds(&src.graph)?;
    Ok(match start {
        Start::Alice => Computed {
            value: Some(pair.a1),
            method: "formula",
            case: None,
            note: None,
        },
        Start::Bob => Computed {
            value: pair.a1_prime,
            method: "formula",
            case: None,
            note: pair
                .a1_prime
                .is_none()
                .then(|| "no finite Bob-start threshold: isolated vertex".to_string()),
        },
    })
}

pub fn exact_value(src: &ResolvedGraph, l: usize, start: Start, memo_budget: usize) -> Result<Computed> {
    let r = threshold_exact_budgeted(&src.graph, l, start.player(), memo_budget)?;
    Ok(Computed { value: r.value, method: "exact", case: None, note: r.note })
}

pub fn compute(
    src: &ResolvedGraph,
    l: usize,
    start: Start,
    method: Method,
    memo_budget: usize,
) -> Result<Computed> {
    match method {
        Method::Closed => closed_value(src, l, start),
        Method::Formula => formula_value(src, l, start),
        Method::Exact => exact_value(src, l, start, memo_budget),
        Method::Auto => {
            if l == 1 && src.family.is_some() {
                if let Ok(c) = closed_value(src, l, start) {
                    return Ok(c);
                }
            }
            if l == 1 {
                if let Ok(c) = formula_value(src, l, start) {
                    return Ok(c);
                }
            }
            exact_value(src, l, start, memo_budget)
        }
    }
}

pub fn item_json(src: &ResolvedGraph, l: usize, start: Start, c: &Computed) -> serde_json::Value {
    json!({
        "graph": src.describe,
        "l": l,
        "start": format!("{start:?}").to_lowercase(),
        "value": c.value,
        "method": c.method,
        "case": c.case,
        "note": c.note,
    })
}
