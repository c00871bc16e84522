//! `oppdc` command-line tool.
//!
//! Exit codes: 0 success (cover found, cover valid), 1 no cover exists,
//! 2 budget exhausted, 3 input error, 4 invalid cover.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub(crate) const EXIT_UNSAT: u8 = 1;
pub(crate) const EXIT_BUDGET: u8 = 2;
pub(crate) const EXIT_INPUT: u8 = 3;
pub(crate) const EXIT_INVALID: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "oppdc", version, about = "Oriented perfect path double covers")]
pub(crate) struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub(crate) enum Command {
    /// Build a cover with an explicit construction.
    Construct(ConstructArgs),
    /// Check a cover against a graph.
    Verify(VerifyArgs),
    /// Search for a cover.
    Solve(SolveArgs),
    /// Run the minimal-counterexample filter over a graph6 stream.
    Filter(FilterArgs),
    /// Cover of the Cartesian product of two graphs.
    Product(ProductArgs),
    /// Convert between graph formats, or between a cover and a cycle double
    /// cover of the graph with a universal vertex added.
    Convert(ConvertArgs),
    /// Print one of the built-in fixture covers.
    Fixture(FixtureArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Family {
    Cycle,
    Biclique,
    Complete,
    Product,
    BlockGraph,
    Fixture,
    CyclePartition,
    Ear,
}

#[derive(Args, Debug)]
pub(crate) struct BudgetArgs {
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = 4_000_000_000)]
    budget_nodes: u64,
    /// Maximum wall-clock time in milliseconds.
    #[arg(long, default_value_t = 600_000)]
    budget_ms: u64,
}

#[derive(Args, Debug)]
pub(crate) struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Fixture name (family `fixture`).
    #[arg(long)]
    name: Option<String>,
    /// Input graph (families `block-graph`, `cycle-partition`, `ear`, and the
    /// left factor of `product`).
    #[arg(long)]
    input: Option<String>,
    /// Right factor of `product`.
    #[arg(long)]
    right: Option<String>,
    /// Also write the constructed graph as an edge list.
    #[arg(long)]
    graph_out: Option<String>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub(crate) struct VerifyArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    cover: String,
    /// Allow zero-length paths at vertices that are not isolated.
    #[arg(long)]
    lenient: bool,
}

#[derive(Args, Debug)]
pub(crate) struct SolveArgs {
    #[arg(long)]
    input: String,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Skip the decomposition pipeline and search the whole graph.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ReportFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub(crate) struct FilterArgs {
    #[arg(long)]
    stream: String,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    report: ReportFormat,
    /// Worker threads (graph-level parallelism).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub(crate) struct ProductArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Cover of the left factor; solved when absent.
    #[arg(long)]
    left_cover: Option<String>,
    /// Cover of the right factor; solved when absent.
    #[arg(long)]
    right_cover: Option<String>,
    #[arg(long)]
    graph_out: Option<String>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Target {
    Graph6,
    EdgeList,
    Dot,
    Socdc,
    Oppdc,
}

#[derive(Args, Debug)]
pub(crate) struct ConvertArgs {
    #[arg(long, value_enum)]
    to: Target,
    #[arg(long)]
    graph: String,
    /// Cover to convert (`socdc`) or to draw (`dot`).
    #[arg(long)]
    cover: Option<String>,
    /// Cycle double cover to convert (`oppdc`).
    #[arg(long)]
    cycles: Option<String>,
    /// Universal vertex of the graph (`oppdc`); defaults to the last vertex.
    #[arg(long)]
    apex: Option<usize>,
    /// Where `socdc` writes the graph with the added vertex.
    #[arg(long)]
    graph_out: Option<String>,
}

#[derive(Args, Debug)]
pub(crate) struct FixtureArgs {
    /// Fixture name; omit to list them.
    name: Option<String>,
    /// Print the graph (edge list) instead of the cover.
    #[arg(long)]
    graph: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
