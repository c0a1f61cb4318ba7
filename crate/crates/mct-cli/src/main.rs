//! `mct`: threshold computation, table emission, cross-validation,
//! enumeration, strategy simulation and interactive play for the
//! monochromatic clique transversal game.

mod crosscheck;
mod play;
mod report;
mod simulate;
mod source;
mod table;
mod threshold;

use std::fs;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mct_core::enumerate::{labeled_graphs, GraphClass};
use mct_core::game::DEFAULT_MEMO_BUDGET;
use mct_core::{Error, Result};

use report::RunReport;
use source::GraphSource;
use threshold::{Method, Start};

#[derive(Parser)]
#[command(name = "mct", version, about = "monochromatic clique transversal game workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    TriangleFree,
    IsolateFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a threshold bias by exact search, formula or closed form
    Threshold {
        #[command(flatten)]
        source: GraphSource,
        /// Bob's per-turn bias
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Start::Alice)]
        start: Start,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Search budget override (also SOLVER_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Emit a threshold table for a product family
    Table {
        #[arg(long)]
        family: String,
        /// Inclusive cycle/path length range, e.g. 3..12
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here instead of stdout (sidecar metadata
        /// goes to <OUT>.meta.json)
        #[arg(long)]
        out: Option<String>,
    },
    /// Cross-validate independent engines against each other
    Crosscheck {
        #[arg(long, value_enum)]
        scope: crosscheck::Scope,
        /// Largest vertex count for the exhaustive scope
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Sample count for the duality scope
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List labeled graphs on n vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Print each graph (edge pairs), not just the count
        #[arg(long)]
        emit: bool,
    },
    /// Play two policies against each other
    Simulate {
        #[command(flatten)]
        source: GraphSource,
        /// Alice's per-turn bias
        #[arg(long)]
        a: usize,
        /// Bob's per-turn bias
        #[arg(long, default_value_t = 1)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Start::Alice)]
        start: Start,
        #[arg(long, value_enum)]
        maker: simulate::PolicyKind,
        #[arg(long, value_enum)]
        breaker: simulate::PolicyKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        runs: usize,
    },
    /// Interactive game against the engine
    Play {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        a: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Side you play
        #[arg(long, value_enum, default_value_t = Start::Alice)]
        human: Start,
        #[arg(long, value_enum, default_value_t = Start::Alice)]
        start: Start,
        /// Save the transcript JSON here
        #[arg(long)]
        save: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Resource(_) => 3,
                _ => 2,
            }
        }
    });
}

fn dispatch(command: Command) -> Result<i32> {
    let started = Instant::now();
    match command {
        Command::Threshold { source, l, start, method, budget } => {
            let src = source.resolve()?;
            let memo = source::budget(budget, DEFAULT_MEMO_BUDGET as u64)? as usize;
            let computed = threshold::compute(&src, l, start, method, memo)?;
            let mut report = RunReport::new(format!(
                "threshold {} l={l} start={start:?} method={method:?}",
                src.describe
            ));
            report.items.push(threshold::item_json(&src, l, start, &computed));
            report.wall_ms = started.elapsed().as_millis();
            report.print();
            Ok(0)
        }
        Command::Table { family, n, m, format, out } => {
            let n_range = table::parse_range(&n)?;
            let m_range = table::parse_range(&m)?;
            let run = table::run(&family, n_range, m_range)?;
            let body = match format {
                Format::Csv => table::to_csv(&run),
                Format::Json => table::to_json(&run),
            };
            for skip in &run.skipped {
                eprintln!("skipped {skip}");
            }
            for miss in &run.mismatches {
                eprintln!("mismatch {miss}");
            }
            match &out {
                Some(path) => {
                    fs::write(path, &body)
                        .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}")))?;
                    let meta = json!({
                        "command": format!("table {family} n={n} m={m}"),
                        "rows": run.cells.len(),
                        "skipped": run.skipped,
                        "mismatches": run.mismatches,
                        "wall_ms": started.elapsed().as_millis(),
                    });
                    let meta_path = format!("{path}.meta.json");
                    fs::write(&meta_path, serde_json::to_string_pretty(&meta).unwrap())
                        .map_err(|e| {
                            Error::InvalidInput(format!("cannot write {meta_path}: {e}"))
                        })?;
                }
                None => {
                    print!("{body}");
                    std::io::stdout().flush().ok();
                }
            }
            Ok(if run.mismatches.is_empty() { 0 } else { 1 })
        }
        Command::Crosscheck { scope, max_n, samples, seed, budget } => {
            let budget = source::budget(budget, DEFAULT_MEMO_BUDGET as u64)?;
            let mut report = RunReport::new(format!("crosscheck {scope:?}"));
            let run = crosscheck::run(scope, max_n, samples, seed, budget, &mut report)?;
            report.wall_ms = started.elapsed().as_millis();
            report.print();
            Ok(if !run.mismatches.is_empty() {
                1
            } else if !run.budget_failures.is_empty() {
                3
            } else {
                0
            })
        }
        Command::Enumerate { n, filter, emit } => {
            let class = match filter {
                Filter::All => GraphClass::All,
                Filter::TriangleFree => GraphClass::TriangleFree,
                Filter::IsolateFree => GraphClass::IsolateFree,
            };
            let mut count = 0usize;
            for g in labeled_graphs(n, class)? {
                if emit {
                    let edges: Vec<String> =
                        g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    println!("n={n} {}", edges.join(" "));
                }
                count += 1;
            }
            println!("count {count}");
            Ok(0)
        }
        Command::Simulate { source, a, b, start, maker, breaker, seed, runs } => {
            let src = source.resolve()?;
            let items = simulate::run(&src, a, b, start, maker, breaker, seed, runs)?;
            let mut report = RunReport::new(format!(
                "simulate {} a={a} b={b} start={start:?} maker={maker:?} breaker={breaker:?}",
                src.describe
            ));
            report.items = items;
            report.wall_ms = started.elapsed().as_millis();
            report.print();
            Ok(0)
        }
        Command::Play { source, a, b, human, start, save } => {
            let src = source.resolve()?;
            let stdin = std::io::stdin();
            let mut input = stdin.lock();
            let mut out = std::io::stdout();
            play::run(&src, a, b, human, start, save.as_deref(), &mut input, &mut out)?;
            Ok(0)
        }
    }
}
