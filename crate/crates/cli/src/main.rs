//! `hpa`: classify and analyse partial (co)actions from files or built-ins.
//!
//! Exit codes: 0 success, 1 mathematical failure (an axiom or identity
//! fails, or a hypothesis is not met), 2 input error.

mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hpa",
    version,
    about = "Exact computations for partial Hopf (co)actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct SourceArgs {
    /// Map file: a coaction, action or partial group action.
    pub file: Option<PathBuf>,
    /// Use a built-in example instead of a file (see `hpa examples list`).
    #[arg(long, conflicts_with = "file")]
    pub example: Option<String>,
    /// Ground field, `q` or `fp:<p>`. Files must match it when given.
    #[arg(long)]
    pub field: Option<String>,
    /// Parameter of the Sweedler idempotent `e_α`.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Dimension for the trivial examples.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of a presentation or map file.
    Check {
        file: PathBuf,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a (co)action as global, weak, lax or partial.
    Classify(SourceArgs),
    /// Transfer between coactions of H and actions of H*, with the dual ring.
    Dualize(SourceArgs),
    /// The smash product A#H and its unital part.
    Smash(SourceArgs),
    /// The Koppinen smash product #(H,A).
    Koppinen(SourceArgs),
    /// Frobenius pair of H and the Frobenius system on (A#H)1_A.
    Frobenius(SourceArgs),
    /// Canonical map, θ and Morita strictness, with the Galois verdict.
    Galois(SourceArgs),
    /// The Morita context (T, #(H,A), A, Q, τ, μ).
    Morita(SourceArgs),
    /// Built-in examples.
    Examples {
        #[command(subcommand)]
        command: ExamplesCommand,
    },
}

#[derive(Subcommand)]
enum ExamplesCommand {
    /// List the built-in examples.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Write the built-in presentations and maps as JSON files.
    Export {
        dir: PathBuf,
        #[arg(long)]
        field: Option<String>,
    },
}

/// What a command produced: a verdict, a human summary and a JSON body.
pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub result: serde_json::Value,
}

fn run(cmd: &Command) -> anyhow::Result<(Outcome, bool)> {
    Ok(match cmd {
        Command::Check { file, field, json } => (commands::check(file, field.as_deref())?, *json),
        Command::Classify(s) => (commands::classify(&source::load(s)?)?, s.json),
        Command::Dualize(s) => (commands::dualize(&source::load(s)?)?, s.json),
        Command::Smash(s) => (commands::smash(&source::load(s)?)?, s.json),
        Command::Koppinen(s) => (commands::koppinen(&source::load(s)?)?, s.json),
        Command::Frobenius(s) => (commands::frobenius(&source::load(s)?)?, s.json),
        Command::Galois(s) => (commands::galois(&source::load(s)?)?, s.json),
        Command::Morita(s) => (commands::morita(&source::load(s)?)?, s.json),
        Command::Examples { command } => match command {
            ExamplesCommand::List { json } => (commands::examples_list(), *json),
            ExamplesCommand::Export { dir, field } => {
                (commands::examples_export(dir, field.as_deref())?, false)
            }
        },
    })
}

fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Check { .. } => "check",
        Command::Classify(_) => "classify",
        Command::Dualize(_) => "dualize",
        Command::Smash(_) => "smash",
        Command::Koppinen(_) => "koppinen",
        Command::Frobenius(_) => "frobenius",
        Command::Galois(_) => "galois",
        Command::Morita(_) => "morita",
        Command::Examples { .. } => "examples",
    }
}

fn wants_json(cmd: &Command) -> bool {
    match cmd {
        Command::Check { json, .. }
        | Command::Examples {
            command: ExamplesCommand::List { json },
        } => *json,
        Command::Classify(s)
        | Command::Dualize(s)
        | Command::Smash(s)
        | Command::Koppinen(s)
        | Command::Frobenius(s)
        | Command::Galois(s)
        | Command::Morita(s) => s.json,
        Command::Examples { .. } => false,
    }
}

/// Library errors about the input exit with 2; failed hypotheses and
/// theorem violations with 1.
fn exit_class(e: &anyhow::Error) -> u8 {
    use hopf_partial::Error as E;
    match e.downcast_ref::<E>() {
        Some(
            E::Precondition(_) | E::TheoremViolation(_) | E::Internal(_) | E::NotInvertible(_),
        ) => 1,
        Some(E::Unsupported(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let kind = name(&cli.command);
    let json_out = wants_json(&cli.command);
    match run(&cli.command) {
        Ok((outcome, json_flag)) => {
            if json_flag {
                let doc = json!({"kind": kind, "ok": outcome.ok, "result": outcome.result});
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(e) => {
            let code = exit_class(&e);
            if json_out {
                let doc =
                    json!({"kind": kind, "ok": false, "error": format!("{e:#}"), "exit": code});
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            }
            eprintln!("hpa {kind}: {e:#}");
            ExitCode::from(code)
        }
    }
}
