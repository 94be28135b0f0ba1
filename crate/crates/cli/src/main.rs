//! `wfrec`: ordinal notations, power-list comparison, descent fuzzing,
//! demo programs and a self-check, over the wfrec-core library.

mod check;
mod commands;
mod failure;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "wfrec", version, about = "Well-founded relations, recursion and ordinal notations")]
struct Cli {
    /// Emit one JSON object on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum exponent nesting accepted by the ordinal parser.
    #[arg(long, global = true, default_value_t = wfrec_core::ordinal::DEFAULT_PARSE_DEPTH)]
    depth: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinal notations below epsilon-0 (`w^2*3 + w + 5`).
    #[command(subcommand)]
    Ord(OrdCommand),
    /// Descending lists of naturals under the power order.
    #[command(subcommand)]
    Pow(PowCommand),
    /// Walk a random strictly descending chain.
    Chain {
        order: Order,
        /// Starting element: a natural, a comma-separated list, or a notation.
        start: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Chain length at which the walk is abandoned.
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        /// Most predecessors a multiset occurrence or ordinal term may spawn.
        #[arg(long, default_value_t = 3)]
        cap: u64,
    },
    /// Run a worked program.
    #[command(subcommand)]
    Demo(DemoCommand),
    /// Run the property suite at desk scale.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum OrdCommand {
    /// Print LT, EQ or GT.
    Compare { a: String, b: String },
    /// Print the canonical form.
    Normalize { a: String },
}

#[derive(Subcommand, Debug)]
enum PowCommand {
    /// Print LT, EQ or GT; both lists must strictly descend.
    Compare { a: String, b: String },
}

#[derive(Subcommand, Debug)]
enum DemoCommand {
    /// Sort a comma-separated list of integers.
    Quicksort { list: String },
    Ackermann {
        m: u64,
        n: u64,
        /// Largest value any argument or intermediate result may reach.
        #[arg(long, default_value_t = wfrec_core::programs::DEFAULT_ACK_BUDGET)]
        budget: u64,
    },
    Fib { n: u64 },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Order {
    Nat,
    PowNat,
    MultisetNat,
    Ord,
}

/// Result of a successful command: text lines and the JSON object.
pub struct Output {
    pub text: String,
    pub json: Value,
    /// Exit code; nonzero for a completed run that found failures.
    pub code: u8,
}

impl Output {
    pub fn ok(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            code: 0,
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Ord(OrdCommand::Compare { a, b }) => commands::ord_compare(a, b, cli.depth),
        Command::Ord(OrdCommand::Normalize { a }) => commands::ord_normalize(a, cli.depth),
        Command::Pow(PowCommand::Compare { a, b }) => commands::pow_compare(a, b),
        Command::Chain {
            order,
            start,
            seed,
            max_steps,
            cap,
        } => commands::chain(*order, start, *seed, *max_steps, *cap, cli.depth),
        Command::Demo(DemoCommand::Quicksort { list }) => commands::demo_quicksort(list),
        Command::Demo(DemoCommand::Ackermann { m, n, budget }) => commands::demo_ackermann(*m, *n, *budget),
        Command::Demo(DemoCommand::Fib { n }) => commands::demo_fib(*n),
        Command::Check { seed } => Ok(check::run(*seed)),
    }
}

/// Deep recursions (Ackermann, long chains) need more stack than the
/// main thread has by default.
const STACK_BYTES: usize = 512 << 20;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = std::thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || {
            wfrec_core::depth::catch_depth(|| dispatch(&cli))
                .unwrap_or_else(|e| Err(Failure::Budget(anyhow::anyhow!("recursion depth budget of {} exceeded", e.budget))))
        })
        .expect("spawn worker thread")
        .join()
        .unwrap_or_else(|_| Err(Failure::Internal(anyhow::anyhow!("internal error"))));
    match result {
        Ok(out) => {
            if json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(failure) => {
            if json {
                println!("{}", failure.to_json());
            } else {
                eprintln!("error: {failure}");
            }
            ExitCode::from(failure.code())
        }
    }
}
