//! Exact solver for biased Maker-Breaker games on hypergraphs and the
//! monochromatic clique transversal wrapper (Bob plays Maker, Alice
//! plays Breaker).

mod policy;
mod simulate;

pub use policy::{
    policy_alice_deletion, policy_bob_attack, policy_breaker_pairing, ExactPolicy,
    LowestPolicy, RandomPolicy, StrategyPolicy,
};
pub use simulate::simulate;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{clique_hypergraph, Hypergraph};
use crate::vertex_set::VertexSet;

/// Default cap on transposition entries per solve invocation.
pub const DEFAULT_MEMO_BUDGET: usize = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Maker,
    Breaker,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Maker => Role::Breaker,
            Role::Breaker => Role::Maker,
        }
    }
}

/// Alice is Breaker, Bob is Maker in the clique transversal game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn role(self) -> Role {
        match self {
            Player::Alice => Role::Breaker,
            Player::Bob => Role::Maker,
        }
    }
}

/// A biased Maker-Breaker game instance.
#[derive(Clone, Debug)]
pub struct GameSpec {
    board: Hypergraph,
    maker_per_turn: usize,
    breaker_per_turn: usize,
    first: Role,
}

impl GameSpec {
    pub fn new(
        board: Hypergraph,
        maker_per_turn: usize,
        breaker_per_turn: usize,
        first: Role,
    ) -> Result<GameSpec> {
        if maker_per_turn == 0 || breaker_per_turn == 0 {
            return Err(Error::InvalidInput("per-turn pick counts must be positive".into()));
        }
        if !board.is_simple() {
            return Err(Error::InvalidInput("game board must be a simple hypergraph".into()));
        }
        Ok(GameSpec { board, maker_per_turn, breaker_per_turn, first })
    }

    pub fn board(&self) -> &Hypergraph {
        &self.board
    }

    pub fn maker_per_turn(&self) -> usize {
        self.maker_per_turn
    }

    pub fn breaker_per_turn(&self) -> usize {
        self.breaker_per_turn
    }

    pub fn first(&self) -> Role {
        self.first
    }

    /// Whose pick the `total`-th pick of the game is (0-based).
    /// Within-turn picks are sequential; the schedule is a fixed
    /// function of the number of picks made so far.
    pub fn mover_at(&self, total: usize) -> Role {
        let cycle = self.maker_per_turn + self.breaker_per_turn;
        let phase = total % cycle;
        match self.first {
            Role::Maker => {
                if phase < self.maker_per_turn {
                    Role::Maker
                } else {
                    Role::Breaker
                }
            }
            Role::Breaker => {
                if phase < self.breaker_per_turn {
                    Role::Breaker
                } else {
                    Role::Maker
                }
            }
        }
    }

    /// Degenerate boards where the first mover's opening quota covers
    /// the whole board get flagged in output metadata.
    pub fn is_degenerate(&self) -> bool {
        let first_quota = match self.first {
            Role::Maker => self.maker_per_turn,
            Role::Breaker => self.breaker_per_turn,
        };
        self.board.n() < first_quota
    }
}

/// A position: the two claimed sets. Turn accounting is derived from
/// the pick totals, so this is also the transposition key.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GameState {
    pub maker: VertexSet,
    pub breaker: VertexSet,
}

impl GameState {
    pub fn total_picks(&self) -> usize {
        self.maker.len() + self.breaker.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Pick {
    pub player: Role,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub winner: Role,
    /// Principal variation, when requested.
    pub variation: Option<Vec<Pick>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Formula,
    ClosedForm,
}

/// Result of a threshold computation: the bias value, or None when no
/// finite bias lets Alice win (Bob-start games with a singleton).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdResult {
    pub value: Option<usize>,
    pub method: Method,
    /// For absent thresholds, why the search was cut off.
    pub note: Option<String>,
}

/// Builds the (b,a)-biased Maker-Breaker spec of the (a,b) clique
/// transversal game on `g`: the board is the clique hypergraph, Bob is
/// Maker with b picks per turn, Alice is Breaker with a picks.
pub fn mct_spec(g: &Graph, a: usize, b: usize, first: Player) -> Result<GameSpec> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("bias parameters must be positive".into()));
    }
    GameSpec::new(clique_hypergraph(g), b, a, first.role())
}

/// Game status of a position: the winner if the game is over.
/// Maker wins the moment his set contains a hyperedge; Breaker wins
/// when every hyperedge meets her set, or the board is exhausted.
pub fn status(spec: &GameSpec, state: &GameState) -> Option<Role> {
    let edges = spec.board().edges();
    if edges.iter().any(|e| e.is_subset(&state.maker)) {
        return Some(Role::Maker);
    }
    if edges.iter().all(|e| e.intersects(&state.breaker)) {
        return Some(Role::Breaker);
    }
    if state.total_picks() == spec.board().n() {
        // every edge is fully played; none is all-Maker, so each one
        // meets Breaker's set
        return Some(Role::Breaker);
    }
    None
}

/// Unplayed vertices, or the empty set once the game is over.
pub fn legal_picks(spec: &GameSpec, state: &GameState) -> VertexSet {
    if status(spec, state).is_some() {
        return VertexSet::empty();
    }
    state
        .maker
        .union(&state.breaker)
        .complement(spec.board().n())
}

/// Adds `v` to the set of the player whose pick it is.
pub fn apply_pick(spec: &GameSpec, state: &GameState, v: usize) -> Result<GameState> {
    if status(spec, state).is_some() {
        return Err(Error::InvalidInput("pick after game over".into()));
    }
    if v >= spec.board().n() || state.maker.contains(v) || state.breaker.contains(v) {
        return Err(Error::InvalidInput(format!("vertex {v} is not an unplayed vertex")));
    }
    let mut next = *state;
    match spec.mover_at(state.total_picks()) {
        Role::Maker => next.maker.insert(v),
        Role::Breaker => next.breaker.insert(v),
    }
    Ok(next)
}

/// Memoized optimal-play solver. Boards are limited to 64 vertices;
/// the intended scale is around 16.
pub struct Solver {
    edges: Vec<u64>,
    n: usize,
    maker_per_turn: usize,
    breaker_per_turn: usize,
    first: Role,
    memo: HashMap<u128, Role>,
    memo_budget: usize,
}

impl Solver {
    pub fn new(spec: &GameSpec) -> Result<Solver> {
        Solver::with_budget(spec, DEFAULT_MEMO_BUDGET)
    }

    pub fn with_budget(spec: &GameSpec, memo_budget: usize) -> Result<Solver> {
        let n = spec.board().n();
        if n == 0 {
            return Err(Error::InvalidInput("empty board".into()));
        }
        if n > 64 {
            return Err(Error::Resource(format!(
                "exact solving supports at most 64 board vertices, got {n}"
            )));
        }
        let edges = spec
            .board()
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, v| m | 1 << v))
            .collect();
        Ok(Solver {
            edges,
            n,
            maker_per_turn: spec.maker_per_turn(),
            breaker_per_turn: spec.breaker_per_turn(),
            first: spec.first(),
            memo: HashMap::new(),
            memo_budget,
        })
    }

    fn mover_at(&self, total: usize) -> Role {
        let cycle = self.maker_per_turn + self.breaker_per_turn;
        let phase = total % cycle;
        let first_quota = match self.first {
            Role::Maker => self.maker_per_turn,
            Role::Breaker => self.breaker_per_turn,
        };
        if phase < first_quota {
            self.first
        } else {
            self.first.other()
        }
    }

    fn terminal(&self, maker: u64, breaker: u64) -> Option<Role> {
        let mut all_hit = true;
        for &e in &self.edges {
            if e & !maker == 0 {
                return Some(Role::Maker);
            }
            if e & breaker == 0 {
                all_hit = false;
            }
        }
        if all_hit {
            return Some(Role::Breaker);
        }
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        if maker | breaker == full {
            return Some(Role::Breaker);
        }
        None
    }

    fn winner_rec(&mut self, maker: u64, breaker: u64) -> Result<Role> {
        if let Some(w) = self.terminal(maker, breaker) {
            return Ok(w);
        }
        let key = maker as u128 | (breaker as u128) << 64;
        if let Some(&w) = self.memo.get(&key) {
            return Ok(w);
        }
        let mover = self.mover_at((maker | breaker).count_ones() as usize);
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let unplayed = full & !(maker | breaker);

        // order picks: vertices of a smallest live edge first
        let mut live_min: Option<u64> = None;
        for &e in &self.edges {
            if e & breaker == 0 {
                let missing = e & !maker;
                if live_min.map_or(true, |m| missing.count_ones() < m.count_ones()) {
                    live_min = Some(missing);
                }
            }
        }
        let preferred = live_min.unwrap_or(0) & unplayed;
        let ordered = iter_bits(preferred).chain(iter_bits(unplayed & !preferred));

        let mut result = mover.other();
        for v in ordered.collect::<Vec<_>>() {
            let (m2, b2) = match mover {
                Role::Maker => (maker | 1 << v, breaker),
                Role::Breaker => (maker, breaker | 1 << v),
            };
            if self.winner_rec(m2, b2)? == mover {
                result = mover;
                break;
            }
        }
        if self.memo.len() >= self.memo_budget {
            return Err(Error::Resource(format!(
                "transposition table exceeded {} entries",
                self.memo_budget
            )));
        }
        self.memo.insert(key, result);
        Ok(result)
    }

    pub fn winner_from(&mut self, state: &GameState) -> Result<Role> {
        let maker = state.maker.iter().fold(0u64, |m, v| m | 1 << v);
        let breaker = state.breaker.iter().fold(0u64, |m, v| m | 1 << v);
        self.winner_rec(maker, breaker)
    }

    pub fn winner(&mut self) -> Result<Role> {
        self.winner_rec(0, 0)
    }

    /// Optimal line of play: the winner keeps their win, the loser
    /// plays the lowest-index vertex.
    fn variation(&mut self) -> Result<Vec<Pick>> {
        let winner = self.winner()?;
        let mut maker = 0u64;
        let mut breaker = 0u64;
        let mut picks = Vec::new();
        while self.terminal(maker, breaker).is_none() {
            let mover = self.mover_at((maker | breaker).count_ones() as usize);
            let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
            let unplayed = full & !(maker | breaker);
            let mut chosen = None;
            for v in iter_bits(unplayed) {
                let (m2, b2) = match mover {
                    Role::Maker => (maker | 1 << v, breaker),
                    Role::Breaker => (maker, breaker | 1 << v),
                };
                if mover != winner || self.winner_rec(m2, b2)? == winner {
                    chosen = Some(v);
                    break;
                }
            }
            let v = chosen.expect("a legal pick exists in a non-terminal position");
            picks.push(Pick { player: mover, vertex: v as usize });
            match mover {
                Role::Maker => maker |= 1 << v,
                Role::Breaker => breaker |= 1 << v,
            }
        }
        Ok(picks)
    }
}

fn iter_bits(mut bits: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            Some(v)
        }
    })
}

/// Optimal-play winner of a game.
pub fn solve(spec: &GameSpec) -> Result<Outcome> {
    solve_budgeted(spec, DEFAULT_MEMO_BUDGET)
}

pub fn solve_budgeted(spec: &GameSpec, memo_budget: usize) -> Result<Outcome> {
    let mut solver = Solver::with_budget(spec, memo_budget)?;
    Ok(Outcome { winner: solver.winner()?, variation: None })
}

/// Winner plus a principal variation witnessing it.
pub fn solve_with_variation(spec: &GameSpec) -> Result<Outcome> {
    let mut solver = Solver::new(spec)?;
    let winner = solver.winner()?;
    let variation = solver.variation()?;
    Ok(Outcome { winner, variation: Some(variation) })
}

/// Smallest a such that Alice wins the (a, l) clique transversal game
/// on `g` with the given starting player, found by an upward linear
/// scan (thresholds in scope are tiny). When no a up to
/// max(board degree, n) works the threshold is reported absent.
pub fn threshold_exact(g: &Graph, l: usize, start: Player) -> Result<ThresholdResult> {
    threshold_exact_budgeted(g, l, start, DEFAULT_MEMO_BUDGET)
}

pub fn threshold_exact_budgeted(
    g: &Graph,
    l: usize,
    start: Player,
    memo_budget: usize,
) -> Result<ThresholdResult> {
    if l == 0 {
        return Err(Error::InvalidInput("bias l must be positive".into()));
    }
    let board = clique_hypergraph(g);
    let cap = board.max_vertex_degree().max(g.n());
    for a in 1..=cap {
        let spec = GameSpec::new(board.clone(), l, a, start.role())?;
        if solve_budgeted(&spec, memo_budget)?.winner == Role::Breaker {
            return Ok(ThresholdResult { value: Some(a), method: Method::Exact, note: None });
        }
    }
    Ok(ThresholdResult {
        value: None,
        method: Method::Exact,
        note: Some(format!(
            "Bob wins for every bias up to the cap {cap}; no finite threshold"
        )),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, disjoint_union, make_cycle, make_path};

    fn c(n: usize) -> Graph {
        make_cycle(n).unwrap()
    }
    fn p(n: usize) -> Graph {
        make_path(n).unwrap()
    }

    #[test]
    fn mct_spec_mapping() {
        let g = cartesian_product(&c(3), &c(4)).unwrap();
        let spec = mct_spec(&g, 2, 1, Player::Alice).unwrap();
        assert_eq!(spec.first(), Role::Breaker);
        assert_eq!(spec.breaker_per_turn(), 2);
        assert_eq!(spec.maker_per_turn(), 1);

        let k2 = mct_spec(&p(2), 1, 1, Player::Alice).unwrap();
        assert_eq!(k2.board().edges().len(), 1);
        assert_eq!(k2.board().edges()[0].to_vec(), vec![0, 1]);

        let k1 = mct_spec(&p(1), 1, 1, Player::Bob).unwrap();
        assert_eq!(k1.board().edges()[0].to_vec(), vec![0]);
        assert_eq!(k1.first(), Role::Maker);

        assert!(mct_spec(&p(2), 0, 1, Player::Alice).is_err());
        assert!(mct_spec(&p(2), 1, 0, Player::Alice).is_err());
    }

    #[test]
    fn solve_small_cases() {
        // Alice takes an endpoint of K2 first and wins
        let out = solve(&mct_spec(&p(2), 1, 1, Player::Alice).unwrap()).unwrap();
        assert_eq!(out.winner, Role::Breaker);

        // Bob-start on K1: Bob claims the singleton immediately
        let out = solve(&mct_spec(&p(1), 1, 1, Player::Bob).unwrap()).unwrap();
        assert_eq!(out.winner, Role::Maker);

        // Bob-start (1,1) on C3 [] C3: Alice wins
        let t33 = cartesian_product(&c(3), &c(3)).unwrap();
        let out = solve(&mct_spec(&t33, 1, 1, Player::Bob).unwrap()).unwrap();
        assert_eq!(out.winner, Role::Breaker);
    }

    #[test]
    fn solve_c3_c4_cases() {
        let g = cartesian_product(&c(3), &c(4)).unwrap();
        // a = 2: Bob wins the Bob-start game, Alice wins the Alice-start game
        let bob_start = solve(&mct_spec(&g, 2, 1, Player::Bob).unwrap()).unwrap();
        assert_eq!(bob_start.winner, Role::Maker);
        let alice_start = solve(&mct_spec(&g, 2, 1, Player::Alice).unwrap()).unwrap();
        assert_eq!(alice_start.winner, Role::Breaker);
    }

    #[test]
    fn threshold_cases() {
        let t33 = cartesian_product(&c(3), &c(3)).unwrap();
        assert_eq!(threshold_exact(&t33, 1, Player::Alice).unwrap().value, Some(1));
        assert_eq!(threshold_exact(&t33, 1, Player::Bob).unwrap().value, Some(1));

        let g = disjoint_union(&p(1), &p(2)).unwrap();
        let r = threshold_exact(&g, 1, Player::Bob).unwrap();
        assert_eq!(r.value, None);
        assert!(r.note.is_some());

        let grid = cartesian_product(&p(2), &p(5)).unwrap();
        assert_eq!(threshold_exact(&grid, 1, Player::Alice).unwrap().value, Some(2));
    }

    #[test]
    fn pick_plumbing() {
        let spec = mct_spec(&p(2), 1, 1, Player::Alice).unwrap();
        let s0 = GameState::default();
        assert_eq!(legal_picks(&spec, &s0).to_vec(), vec![0, 1]);
        let s1 = apply_pick(&spec, &s0, 0).unwrap();
        assert!(s1.breaker.contains(0)); // Alice first = Breaker first
        assert!(apply_pick(&spec, &s1, 0).is_err());
        // game is over: the only edge is hit
        assert_eq!(status(&spec, &s1), Some(Role::Breaker));
        assert!(apply_pick(&spec, &s1, 1).is_err());
        assert!(legal_picks(&spec, &s1).is_empty());
    }

    #[test]
    fn turn_order() {
        // Alice (Breaker) first with a = 2, b = 1
        let g = cartesian_product(&c(3), &p(2)).unwrap();
        let spec = mct_spec(&g, 2, 1, Player::Alice).unwrap();
        assert_eq!(spec.mover_at(0), Role::Breaker);
        assert_eq!(spec.mover_at(1), Role::Breaker);
        assert_eq!(spec.mover_at(2), Role::Maker);
        assert_eq!(spec.mover_at(3), Role::Breaker);
    }

    #[test]
    fn variation_is_consistent() {
        let t33 = cartesian_product(&c(3), &c(3)).unwrap();
        let spec = mct_spec(&t33, 1, 1, Player::Bob).unwrap();
        let out = solve_with_variation(&spec).unwrap();
        let picks = out.variation.unwrap();
        // replaying the variation reaches a position won by the winner
        let mut state = GameState::default();
        for p in &picks {
            assert_eq!(spec.mover_at(state.total_picks()), p.player);
            state = apply_pick(&spec, &state, p.vertex).unwrap();
        }
        assert_eq!(status(&spec, &state), Some(out.winner));
    }

    #[test]
    fn degenerate_flag() {
        let spec = mct_spec(&p(2), 5, 1, Player::Alice).unwrap();
        assert!(spec.is_degenerate());
        let spec = mct_spec(&p(2), 2, 1, Player::Alice).unwrap();
        assert!(!spec.is_degenerate());
    }

    #[test]
    fn memo_budget_enforced() {
        let g = cartesian_product(&c(3), &c(4)).unwrap();
        let spec = mct_spec(&g, 1, 1, Player::Alice).unwrap();
        assert!(matches!(solve_budgeted(&spec, 4), Err(Error::Resource(_))));
    }
}
