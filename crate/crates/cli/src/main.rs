//! `forcing-lab`: k-forcing numbers, bounds and exhaustive verification from
//! the command line.
//!
//! Exit codes: 0 success, 1 counterexample or property failure, 2 input
//! error, 3 resource abort.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_ABORT: u8 = 3;

pub const DEFAULT_SEED: u64 = 0x5EED_7EE5;

#[derive(Debug, Parser)]
#[command(
    name = "forcing-lab",
    version,
    about = "k-forcing sets, forcing numbers and extremal verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute F_k(G) exactly and print the result as JSON.
    Solve(SolveArgs),
    /// Run the colour change rule from an initial set and print the trace.
    Closure(ClosureArgs),
    /// Verify the extremal characterisation over a stream of graphs.
    Verify(VerifyArgs),
    /// Evaluate the degree bounds for one graph.
    Bounds(BoundsArgs),
    /// Property suites for the supporting lemmas.
    #[command(subcommand)]
    Lemmas(LemmaCommand),
}

/// Where a single graph comes from. Exactly one source is required.
#[derive(Debug, Clone, Args, Serialize)]
pub struct GraphSource {
    /// Inline graph6 record.
    #[arg(long, group = "source")]
    pub graph6: Option<String>,
    /// Family spec such as `cycle:5`, `complete_bipartite:3,3` or `petersen`.
    #[arg(long, group = "source")]
    pub family: Option<String>,
    /// File holding a graph6 record (first line) or an edge list.
    #[arg(long, group = "source")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// Forcing parameter.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// Abort the exact search after this many nodes.
    #[arg(long, default_value_t = forcing_core::solver::DEFAULT_NODE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: u64,
    /// Worker threads (0 = one per core).
    #[arg(long, env = "FORCING_LAB_WORKERS", default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    /// Branch and bound.
    Bnb,
    /// Plain subset enumeration.
    Oracle,
    /// Greedy upper bound only.
    Greedy,
    /// Smallest forcing set whose complement induces a connected subgraph.
    ConnectedComplement,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = SolveMethod::Bnb)]
    pub method: SolveMethod,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated initial vertex ids.
    #[arg(long, value_delimiter = ',', required = true)]
    pub set: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// graph6 file, one graph per line; `-` or absent reads standard input.
    #[arg(long, conflicts_with = "enumerate")]
    pub input: Option<PathBuf>,
    /// Use the built-in enumerator for all connected graphs on this many vertices.
    #[arg(long)]
    pub enumerate: Option<usize>,
    #[command(flatten)]
    pub common: Common,
    /// JSONL record output; the CSV summary goes next to it. Records go to
    /// standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Explicit CSV summary path.
    #[arg(long)]
    pub summary_csv: Option<PathBuf>,
    /// Skip the structural check on extremal graphs.
    #[arg(long)]
    pub no_claim1: bool,
    /// Recorded in the output; the sweep itself is deterministic.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum LemmaCommand {
    /// Every (leaves - 1)-subset of a tree's leaves is a zero forcing set.
    Trees(TreesArgs),
    /// Closed-form zero forcing numbers of cycles, complete and balanced
    /// complete bipartite graphs.
    Known(KnownArgs),
    /// Complements of minimum connected-complement forcing sets are connected
    /// k-dominating sets.
    Domination(DominationArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct TreesArgs {
    /// Check every labelled tree up to this order.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    /// Number of additional random trees.
    #[arg(long, default_value_t = 500)]
    pub random: usize,
    #[arg(long, default_value_t = 9)]
    pub random_min_n: usize,
    #[arg(long, default_value_t = 16)]
    pub random_max_n: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, env = "FORCING_LAB_WORKERS", default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct KnownArgs {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..))]
    pub delta_max: u64,
    #[arg(long, default_value_t = 12)]
    pub cycle_max: usize,
    #[arg(long, default_value_t = forcing_core::solver::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
    #[arg(long, env = "FORCING_LAB_WORKERS", default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct DominationArgs {
    /// Check all connected graphs on 2..=max-n vertices (at most 8).
    #[arg(long, default_value_t = 7)]
    pub max_n: usize,
    /// Forcing parameters to check.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub k: Vec<usize>,
    #[arg(long, default_value_t = forcing_core::solver::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
    #[arg(long, env = "FORCING_LAB_WORKERS", default_value_t = 0)]
    pub workers: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve(args) => commands::solve(args),
        Command::Closure(args) => commands::closure(args),
        Command::Verify(args) => commands::verify(args),
        Command::Bounds(args) => commands::bounds(args),
        Command::Lemmas(LemmaCommand::Trees(args)) => commands::lemma_trees(args),
        Command::Lemmas(LemmaCommand::Known(args)) => commands::lemma_known(args),
        Command::Lemmas(LemmaCommand::Domination(args)) => commands::lemma_domination(args),
    };
    ExitCode::from(code)
}
