use clap::ValueEnum;
use serde_json::json;

use mct_core::game::{
    mct_spec, policy_alice_deletion, policy_bob_attack, policy_breaker_pairing, simulate,
    ExactPolicy, GameSpec, LowestPolicy, Pick, RandomPolicy, Role, StrategyPolicy,
};
use mct_core::graph::Graph;
use mct_core::invariants::{a1_by_deletion, exists_deletion_set};
use mct_core::{Error, Result};

use crate::source::ResolvedGraph;
use crate::threshold::Start;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyKind {
    Exact,
    Lowest,
    Random,
    Attack,
    Pairing,
    Deletion,
}

pub fn build_policy(
    kind: PolicyKind,
    role: Role,
    g: &Graph,
    spec: &GameSpec,
    seed: u64,
) -> Result<Box<dyn StrategyPolicy>> {
    match (kind, role) {
        (PolicyKind::Exact, _) => Ok(Box::new(ExactPolicy::new())),
        (PolicyKind::Lowest, _) => Ok(Box::new(LowestPolicy)),
        (PolicyKind::Random, _) => Ok(Box::new(RandomPolicy::seeded(seed))),
        (PolicyKind::Attack, Role::Maker) => Ok(Box::new(policy_bob_attack(g)?)),
        (PolicyKind::Pairing, Role::Breaker) => Ok(Box::new(policy_breaker_pairing(spec)?)),
        (PolicyKind::Deletion, Role::Breaker) => {
            let t = a1_by_deletion(g)?;
            let witness = exists_deletion_set(g, t)
                .expect("a1_by_deletion returned a feasible bound");
            Ok(Box::new(policy_alice_deletion(g, &witness)?))
        }
        (PolicyKind::Attack, Role::Breaker) => {
            Err(Error::InvalidInput("attack is a Maker (Bob) policy".into()))
        }
        (kind, Role::Maker) => {
            Err(Error::InvalidInput(format!("{kind:?} is a Breaker (Alice) policy")))
        }
    }
}

pub fn picks_json(g: &Graph, picks: &[Pick]) -> serde_json::Value {
    json!(picks
        .iter()
        .map(|p| {
            json!({
                "player": match p.player { Role::Maker => "bob", Role::Breaker => "alice" },
                "vertex": p.vertex,
                "label": g.label(p.vertex),
            })
        })
        .collect::<Vec<_>>())
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    src: &ResolvedGraph,
    a: usize,
    b: usize,
    start: Start,
    maker: PolicyKind,
    breaker: PolicyKind,
    seed: u64,
    runs: usize,
) -> Result<Vec<serde_json::Value>> {
    let spec = mct_spec(&src.graph, a, b, start.player())?;
    let mut items = Vec::new();
    for i in 0..runs {
        let run_seed = seed + i as u64;
        let mut maker_policy = build_policy(maker, Role::Maker, &src.graph, &spec, run_seed)?;
        let mut breaker_policy =
            build_policy(breaker, Role::Breaker, &src.graph, &spec, run_seed ^ 0x5eed)?;
        let (outcome, picks) =
            simulate(&spec, maker_policy.as_mut(), breaker_policy.as_mut())?;
        items.push(json!({
            "run": i,
            "seed": run_seed,
            "winner": match outcome.winner { Role::Maker => "bob", Role::Breaker => "alice" },
            "picks": picks_json(&src.graph, &picks),
        }));
    }
    Ok(items)
}
