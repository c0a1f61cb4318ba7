use clap::ValueEnum;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use mct_core::closed_forms::{cylinder_a1_via_domination, grid_a1_via_domination};
use mct_core::enumerate::{labeled_graphs, GraphClass};
use mct_core::game::{solve_budgeted, threshold_exact_budgeted, GameSpec, Player, Role};
use mct_core::hypergraph::{simplify, transversal_hypergraph};
use mct_core::invariants::{a1_by_alpha_budgeted, a1_by_deletion};
use mct_core::{Error, Hypergraph, Result, VertexSet};

use crate::report::RunReport;
use crate::table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    TinyExhaustive,
    Families,
    HypergraphDuality,
}

pub struct CheckRun {
    pub checked: usize,
    pub mismatches: Vec<String>,
    pub budget_failures: Vec<String>,
}

pub fn run(
    scope: Scope,
    max_n: usize,
    samples: usize,
    seed: u64,
    budget: u64,
    report: &mut RunReport,
) -> Result<CheckRun> {
    let mut run = CheckRun { checked: 0, mismatches: Vec::new(), budget_failures: Vec::new() };
    match scope {
        Scope::TinyExhaustive => tiny_exhaustive(max_n, budget, &mut run)?,
        Scope::Families => families(&mut run)?,
        Scope::HypergraphDuality => duality(samples, seed, budget, &mut run)?,
    }
    report.items.push(json!({
        "scope": format!("{scope:?}"),
        "checked": run.checked,
        "budget_failures": run.budget_failures,
    }));
    report.mismatches.extend(run.mismatches.iter().cloned());
    Ok(run)
}

/// Both threshold formulas against the exact game solver on every
/// labeled triangle-free isolate-free graph with at most max_n
/// vertices.
fn tiny_exhaustive(max_n: usize, budget: u64, run: &mut CheckRun) -> Result<()> {
    for n in 2..=max_n {
        for g in labeled_graphs(n, GraphClass::TriangleFreeIsolateFree)? {
            let tag = || format!("n={n} edges={:?}", g.edges());
            let alpha = match a1_by_alpha_budgeted(&g, budget) {
                Ok(v) => Some(v),
                Err(Error::Resource(msg)) => {
                    run.budget_failures.push(format!("{}: {msg}", tag()));
                    None
                }
                Err(e) => return Err(e),
            };
            let deletion = a1_by_deletion(&g)?;
            if let Some(alpha) = alpha {
                if alpha != deletion {
                    run.mismatches
                        .push(format!("{}: alpha route {alpha} vs deletion route {deletion}", tag()));
                }
            }
            for (start, expect) in
                [(Player::Alice, deletion), (Player::Bob, g.max_degree())]
            {
                match threshold_exact_budgeted(&g, 1, start, budget as usize) {
                    Ok(r) if r.value == Some(expect) => {}
                    Ok(r) => run.mismatches.push(format!(
                        "{}: {start:?}-start formula {expect} vs exact {:?}",
                        tag(),
                        r.value
                    )),
                    Err(Error::Resource(msg)) => {
                        run.budget_failures.push(format!("{}: {msg}", tag()))
                    }
                    Err(e) => return Err(e),
                }
            }
            run.checked += 1;
        }
    }
    Ok(())
}

/// Closed forms against the formula engine (and the domination
/// pathway) across the full table ranges.
fn families(run: &mut CheckRun) -> Result<()> {
    for (family, n_range, m_range) in [
        ("torus", (3, 8), (3, 8)),
        ("cylinder", (3, 12), (2, 8)),
        ("grid", (2, 6), (2, 13)),
    ] {
        let t = table::run(family, n_range, m_range)?;
        run.checked += t.cells.len();
        run.mismatches.extend(t.mismatches);
        for cell in &t.cells {
            let via_domination = match family {
                "cylinder" if cell.n >= 4 && cell.m >= 3 => {
                    Some(cylinder_a1_via_domination(cell.n, cell.m)?)
                }
                "grid" if cell.n >= 3 => Some(grid_a1_via_domination(cell.n, cell.m)?),
                _ => None,
            };
            if let Some(v) = via_domination {
                if v != cell.a1 {
                    run.mismatches.push(format!(
                        "{family}({},{}): a1 closed {} vs domination {v}",
                        cell.n, cell.m, cell.a1
                    ));
                }
            }
        }
    }
    Ok(())
}

fn random_simple_hypergraph(rng: &mut StdRng) -> Result<Hypergraph> {
    let n = rng.gen_range(2..=10usize);
    let count = rng.gen_range(1..=8usize);
    let edges: Vec<VertexSet> = (0..count)
        .map(|_| {
            let mask = rng.gen_range(1u32..1 << n);
            (0..n).filter(|&v| mask >> v & 1 == 1).collect()
        })
        .collect();
    simplify(&Hypergraph::new(n, edges)?)
}

/// Tr(Tr(H)) = H on random simple hypergraphs; on singleton-free
/// boards with at most 8 vertices also the (1,1) role-switch game
/// equivalence.
fn duality(samples: usize, seed: u64, budget: u64, run: &mut CheckRun) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(seed);
    for trial in 0..samples {
        let h = random_simple_hypergraph(&mut rng)?;
        let tr = transversal_hypergraph(&h)?;
        let back = transversal_hypergraph(&tr)?;
        let mut a: Vec<Vec<usize>> = h.edges().iter().map(|e| e.to_vec()).collect();
        let mut b: Vec<Vec<usize>> = back.edges().iter().map(|e| e.to_vec()).collect();
        a.sort();
        b.sort();
        if a != b {
            run.mismatches.push(format!("trial {trial}: Tr(Tr(H)) != H for H = {a:?}"));
        }
        if h.n() <= 8 && !h.has_singleton() {
            let on_h = GameSpec::new(h.clone(), 1, 1, Role::Maker)?;
            let on_tr = GameSpec::new(tr, 1, 1, Role::Breaker)?;
            match (
                solve_budgeted(&on_h, budget as usize),
                solve_budgeted(&on_tr, budget as usize),
            ) {
                (Ok(x), Ok(y)) => {
                    if (x.winner == Role::Maker) != (y.winner == Role::Breaker) {
                        run.mismatches
                            .push(format!("trial {trial}: role switch broken for H = {a:?}"));
                    }
                }
                (Err(Error::Resource(msg)), _) | (_, Err(Error::Resource(msg))) => {
                    run.budget_failures.push(format!("trial {trial}: {msg}"))
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        run.checked += 1;
    }
    Ok(())
}
