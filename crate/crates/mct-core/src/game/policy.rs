//! Deterministic move-selection rules: the scripted strategies from
//! the threshold proofs, plus exact, lowest-index and random play.

use std::collections::VecDeque;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::DeletionWitness;

use super::{legal_picks, GameSpec, GameState, Pick, Role, Solver};

/// A move-selection rule usable in simulation. `choose` must return a
/// legal pick whenever one exists; `None` is a policy fault.
pub trait StrategyPolicy {
    fn name(&self) -> &'static str;
    fn choose(&mut self, spec: &GameSpec, state: &GameState, transcript: &[Pick])
        -> Option<usize>;
}

/// Always the lowest-index unplayed vertex.
pub struct LowestPolicy;

impl StrategyPolicy for LowestPolicy {
    fn name(&self) -> &'static str {
        "lowest"
    }
    fn choose(&mut self, spec: &GameSpec, state: &GameState, _: &[Pick]) -> Option<usize> {
        legal_picks(spec, state).min()
    }
}

/// Uniformly random unplayed vertex from a seeded generator.
pub struct RandomPolicy {
    rng: StdRng,
}

impl RandomPolicy {
    pub fn seeded(seed: u64) -> RandomPolicy {
        RandomPolicy { rng: StdRng::seed_from_u64(seed) }
    }
}

impl StrategyPolicy for RandomPolicy {
    fn name(&self) -> &'static str {
        "random"
    }
    fn choose(&mut self, spec: &GameSpec, state: &GameState, _: &[Pick]) -> Option<usize> {
        let legal = legal_picks(spec, state).to_vec();
        if legal.is_empty() {
            return None;
        }
        Some(legal[self.rng.gen_range(0..legal.len())])
    }
}

/// Optimal play backed by the exact solver; the transposition table is
/// shared across picks of one game.
pub struct ExactPolicy {
    solver: Option<Solver>,
}

impl ExactPolicy {
    pub fn new() -> ExactPolicy {
        ExactPolicy { solver: None }
    }
}

impl Default for ExactPolicy {
    fn default() -> Self {
        Self::new()
    }
}

impl StrategyPolicy for ExactPolicy {
    fn name(&self) -> &'static str {
        "exact"
    }
    fn choose(&mut self, spec: &GameSpec, state: &GameState, _: &[Pick]) -> Option<usize> {
        if self.solver.is_none() {
            self.solver = Solver::new(spec).ok();
        }
        let solver = self.solver.as_mut()?;
        let mover = spec.mover_at(state.total_picks());
        let legal = legal_picks(spec, state).to_vec();
        let mut fallback = None;
        for &v in &legal {
            let mut next = *state;
            match mover {
                Role::Maker => next.maker.insert(v),
                Role::Breaker => next.breaker.insert(v),
            }
            match solver.winner_from(&next) {
                Ok(w) if w == mover => return Some(v),
                Ok(_) => fallback = fallback.or(Some(v)),
                Err(_) => return None,
            }
        }
        fallback
    }
}

/// Breaker strategy for boards without singletons when her bias covers
/// the maximum hyperedge degree: answer each Maker pick v with an
/// unplayed vertex from every hyperedge containing v, padding with the
/// lowest-index unplayed vertex when picks remain.
pub struct PairingBreakerPolicy {
    obligations: VecDeque<usize>, // hyperedge indices still to answer
    processed: usize,             // transcript prefix already handled
}

pub fn policy_breaker_pairing(spec: &GameSpec) -> Result<PairingBreakerPolicy> {
    if spec.board().has_singleton() {
        return Err(Error::Domain(
            "pairing strategy requires a board without singletons".into(),
        ));
    }
    if spec.breaker_per_turn() < spec.board().max_vertex_degree() {
        return Err(Error::Domain(format!(
            "pairing strategy needs breaker bias >= max hyperedge degree {}",
            spec.board().max_vertex_degree()
        )));
    }
    Ok(PairingBreakerPolicy { obligations: VecDeque::new(), processed: 0 })
}

impl StrategyPolicy for PairingBreakerPolicy {
    fn name(&self) -> &'static str {
        "pairing"
    }
    fn choose(&mut self, spec: &GameSpec, state: &GameState, transcript: &[Pick]) -> Option<usize> {
        for pick in &transcript[self.processed..] {
            if pick.player == Role::Maker {
                for (i, e) in spec.board().edges().iter().enumerate() {
                    if e.contains(pick.vertex) {
                        self.obligations.push_back(i);
                    }
                }
            }
        }
        self.processed = transcript.len();
        let unplayed = legal_picks(spec, state);
        while let Some(i) = self.obligations.pop_front() {
            if let Some(v) = spec.board().edges()[i].intersection(&unplayed).min() {
                return Some(v);
            }
        }
        unplayed.min()
    }
}

/// Alice's deletion-set strategy on a triangle-free graph: claim the
/// witness set X in the first turn, then answer each Bob pick with all
/// of its unplayed neighbors.
pub struct DeletionBreakerPolicy {
    graph: Graph,
    witness: DeletionWitness,
    pending_x: VecDeque<usize>,
    obligations: VecDeque<usize>, // vertices to claim
    processed: usize,
}

pub fn policy_alice_deletion(g: &Graph, witness: &DeletionWitness) -> Result<DeletionBreakerPolicy> {
    if let Some((u, v, w)) = g.find_triangle() {
        return Err(Error::Domain(format!(
            "deletion strategy requires a triangle-free graph; found {{{u}, {v}, {w}}}"
        )));
    }
    if !g.isolated_vertices().is_empty() {
        return Err(Error::Domain("deletion strategy requires an isolate-free graph".into()));
    }
    if !witness.is_valid_for(g) {
        return Err(Error::Domain("invalid deletion witness for this graph".into()));
    }
    Ok(DeletionBreakerPolicy {
        graph: g.clone(),
        witness: witness.clone(),
        pending_x: witness.x.iter().collect(),
        obligations: VecDeque::new(),
        processed: 0,
    })
}

impl StrategyPolicy for DeletionBreakerPolicy {
    fn name(&self) -> &'static str {
        "deletion"
    }
    fn choose(&mut self, spec: &GameSpec, state: &GameState, transcript: &[Pick]) -> Option<usize> {
        if spec.breaker_per_turn() < self.witness.t {
            return None; // bias below the witness bound
        }
        for pick in &transcript[self.processed..] {
            if pick.player == Role::Maker {
                for u in self.graph.neighbors(pick.vertex).iter() {
                    self.obligations.push_back(u);
                }
            }
        }
        self.processed = transcript.len();
        let unplayed = legal_picks(spec, state);
        while let Some(v) = self.pending_x.pop_front() {
            if unplayed.contains(v) {
                return Some(v);
            }
        }
        while let Some(v) = self.obligations.pop_front() {
            if unplayed.contains(v) {
                return Some(v);
            }
        }
        unplayed.min()
    }
}

/// Bob's attack strategy on a triangle-free graph: grab a vertex with
/// more than a unplayed neighbors, then claim one of its neighbors in
/// the following turn.
pub struct AttackMakerPolicy {
    graph: Graph,
    last_attack: Option<usize>,
}

pub fn policy_bob_attack(g: &Graph) -> Result<AttackMakerPolicy> {
    if let Some((u, v, w)) = g.find_triangle() {
        return Err(Error::Domain(format!(
            "attack strategy requires a triangle-free graph; found {{{u}, {v}, {w}}}"
        )));
    }
    Ok(AttackMakerPolicy { graph: g.clone(), last_attack: None })
}

impl StrategyPolicy for AttackMakerPolicy {
    fn name(&self) -> &'static str {
        "attack"
    }
    fn choose(&mut self, spec: &GameSpec, state: &GameState, _: &[Pick]) -> Option<usize> {
        let unplayed = legal_picks(spec, state);
        if let Some(v) = self.last_attack.take() {
            if let Some(u) = self.graph.neighbors(v).intersection(&unplayed).min() {
                return Some(u);
            }
        }
        let a = spec.breaker_per_turn();
        let attack = unplayed
            .iter()
            .find(|&v| self.graph.neighbors(v).intersection(&unplayed).len() > a);
        if let Some(v) = attack {
            self.last_attack = Some(v);
            return Some(v);
        }
        unplayed.min()
    }
}
