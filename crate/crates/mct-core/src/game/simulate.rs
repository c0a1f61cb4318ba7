use crate::error::{Error, Result};

use super::policy::StrategyPolicy;
use super::{apply_pick, status, GameSpec, GameState, Outcome, Pick, Role};

/// Plays a full game between two policies and returns the winner with
/// the pick transcript. An illegal or missing pick is a policy fault.
pub fn simulate(
    spec: &GameSpec,
    maker: &mut dyn StrategyPolicy,
    breaker: &mut dyn StrategyPolicy,
) -> Result<(Outcome, Vec<Pick>)> {
    let mut state = GameState::default();
    let mut transcript = Vec::new();
    loop {
        if let Some(winner) = status(spec, &state) {
            return Ok((Outcome { winner, variation: None }, transcript));
        }
        let mover = spec.mover_at(state.total_picks());
        let policy: &mut dyn StrategyPolicy = match mover {
            Role::Maker => maker,
            Role::Breaker => breaker,
        };
        let v = policy.choose(spec, &state, &transcript).ok_or_else(|| {
            Error::PolicyFault(format!("{} policy produced no pick for {mover:?}", policy.name()))
        })?;
        state = apply_pick(spec, &state, v).map_err(|e| {
            Error::PolicyFault(format!(
                "{} policy picked vertex {v} for {mover:?}: {e}",
                policy.name()
            ))
        })?;
        transcript.push(Pick { player: mover, vertex: v });
    }
}
