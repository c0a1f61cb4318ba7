use std::fs;
use std::io::{BufRead, Write};

use serde_json::json;

use mct_core::game::{
    apply_pick, legal_picks, mct_spec, policy_bob_attack, policy_breaker_pairing, status,
    ExactPolicy, GameState, LowestPolicy, Pick, Role, StrategyPolicy,
};
use mct_core::{Error, Result};

use crate::simulate::picks_json;
use crate::source::ResolvedGraph;
use crate::threshold::Start;

const EXACT_PLAY_LIMIT: usize = 14;

#[allow(clippy::too_many_arguments)]
pub fn run(
    src: &ResolvedGraph,
    a: usize,
    b: usize,
    human: Start,
    start: Start,
    save: Option<&str>,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<()> {
    let g = &src.graph;
    let spec = mct_spec(g, a, b, start.player())?;
    let human_role = human.player().role();

    let exact = spec.board().n() <= EXACT_PLAY_LIMIT;
    let mut engine: Box<dyn StrategyPolicy> = if exact {
        Box::new(ExactPolicy::new())
    } else {
        let scripted: Box<dyn StrategyPolicy> = match human_role {
            // engine plays Bob
            Role::Breaker => match policy_bob_attack(g) {
                Ok(p) => Box::new(p),
                Err(_) => Box::new(LowestPolicy),
            },
            // engine plays Alice
            Role::Maker => match policy_breaker_pairing(&spec) {
                Ok(p) => Box::new(p),
                Err(_) => Box::new(LowestPolicy),
            },
        };
        writeln!(
            out,
            "board has {} vertices; engine uses the scripted {} policy instead of exact search",
            spec.board().n(),
            scripted.name()
        )
        .ok();
        scripted
    };
    let mut hinter = exact.then(ExactPolicy::new);

    writeln!(
        out,
        "playing {} as {:?}: a = {a}, b = {b}, {:?} starts; commands: vertex index, quit",
        src.describe, human, start
    )
    .ok();

    let mut state = GameState::default();
    let mut transcript: Vec<Pick> = Vec::new();
    let winner = loop {
        if let Some(w) = status(&spec, &state) {
            break Some(w);
        }
        let mover = spec.mover_at(state.total_picks());
        let v = if mover == human_role {
            let legal = legal_picks(&spec, &state).to_vec();
            let shown: Vec<String> =
                legal.iter().map(|&v| format!("{v}={}", g.label(v))).collect();
            writeln!(out, "your move; unplayed: {}", shown.join(" ")).ok();
            if let Some(h) = hinter.as_mut() {
                if let Some(hint) = h.choose(&spec, &state, &transcript) {
                    writeln!(out, "hint: {} ({})", hint, g.label(hint)).ok();
                }
            }
            match read_pick(input, out, &legal)? {
                None => {
                    // quit: emit the partial transcript
                    finish(src, None, &transcript, save, out)?;
                    return Ok(());
                }
                Some(v) => v,
            }
        } else {
            let v = engine.choose(&spec, &state, &transcript).ok_or_else(|| {
                Error::PolicyFault(format!("{} engine produced no pick", engine.name()))
            })?;
            writeln!(out, "engine plays {} ({})", v, g.label(v)).ok();
            v
        };
        state = apply_pick(&spec, &state, v)?;
        transcript.push(Pick { player: mover, vertex: v });
    };

    let w = winner.expect("loop exits with a winner");
    let human_won = w == human_role;
    writeln!(
        out,
        "game over: {} wins{}",
        match w { Role::Breaker => "Alice", Role::Maker => "Bob" },
        if human_won { " - that is you" } else { "" }
    )
    .ok();
    finish(src, Some(w), &transcript, save, out)
}

/// Reads one pick; re-prompts on anything illegal; None means quit.
fn read_pick(
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    legal: &[usize],
) -> Result<Option<usize>> {
    loop {
        write!(out, "> ").ok();
        out.flush().ok();
        let mut line = String::new();
        if input.read_line(&mut line).map_err(|e| Error::InvalidInput(e.to_string()))? == 0 {
            return Ok(None); // EOF counts as quit
        }
        let word = line.trim();
        if word.eq_ignore_ascii_case("quit") {
            return Ok(None);
        }
        match word.parse::<usize>() {
            Ok(v) if legal.contains(&v) => return Ok(Some(v)),
            _ => {
                writeln!(out, "illegal pick {word:?}; choose an unplayed vertex index").ok();
            }
        }
    }
}

fn finish(
    src: &ResolvedGraph,
    winner: Option<Role>,
    transcript: &[Pick],
    save: Option<&str>,
    out: &mut dyn Write,
) -> Result<()> {
    let record = json!({
        "graph": src.describe,
        "winner": winner.map(|w| match w { Role::Maker => "bob", Role::Breaker => "alice" }),
        "picks": picks_json(&src.graph, transcript),
    });
    match save {
        Some(path) => {
            fs::write(path, serde_json::to_string_pretty(&record).expect("serializes"))
                .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
            writeln!(out, "transcript saved to {path}").ok();
        }
        None => {
            writeln!(out, "{record}").ok();
        }
    }
    Ok(())
}
