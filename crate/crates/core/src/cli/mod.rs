mod commands;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gengraph::graphcore::SearchBudget;
use gengraph::groupkit::DEFAULT_MAX_ORDER;
use gengraph::verifier::Question;

/// Generating graphs of finite 2-generated groups.
#[derive(Debug, Parser)]
#[command(name = "gengraph", version)]
pub struct Cli {
    /// Largest group order that will be built.
    #[arg(long, global = true, env = "GENGRAPH_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_order: u64,
    /// Node budget for exact searches.
    #[arg(long, global = true, default_value_t = SearchBudget::DEFAULT_NODES)]
    budget: u64,
    /// Omit the timestamped header line of table output.
    #[arg(long, global = true)]
    no_header: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, nilpotency, Sylow data and Frattini subgroup of a group.
    Info {
        spec: String,
        #[command(flatten)]
        out: Output,
    },
    /// Export Γ(G) or Δ(G).
    Graph {
        spec: String,
        /// Export Γ(G) (the default).
        #[arg(long, conflicts_with = "delta")]
        gamma: bool,
        /// Export Δ(G), Γ(G) without isolated vertices.
        #[arg(long)]
        delta: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Degree statistics of Γ(G) against the closed forms.
    Stats {
        spec: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run checks over a catalog or the given groups.
    Verify {
        /// Groups to check instead of a catalog.
        specs: Vec<String>,
        /// Comma-separated check ids; all checks by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// `default` or a catalog file.
        #[arg(long)]
        catalog: Option<String>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Test one of the open questions on arbitrary 2-generated groups.
    Scan {
        #[arg(long, value_parser = parse_question)]
        question: Question,
        /// File with one group spec per line.
        #[arg(long)]
        groups: Option<PathBuf>,
        specs: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Total domination number of a product of complete graphs.
    Tdn {
        #[arg(required = true)]
        parts: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// A Hamiltonian cycle of Δ(G), with chords when the cycle carries them.
    Hamcycle {
        spec: String,
        #[command(flatten)]
        out: Output,
    },
    /// Re-check a certificate against a graph.
    CheckCert {
        /// Certificate in tagged JSON form.
        cert: PathBuf,
        /// Graph in JSON adjacency form.
        #[arg(long, conflicts_with = "spec")]
        graph: Option<PathBuf>,
        /// Rebuild the graph from a group instead.
        #[arg(long)]
        spec: Option<String>,
        /// With --spec, use Δ(G) rather than Γ(G).
        #[arg(long)]
        delta: bool,
    },
}

fn parse_question(s: &str) -> Result<Question, String> {
    s.parse()
}

/// Failures that end the process: bad input exits 2, an exhausted search
/// budget exits 3.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match commands::dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            let (CliError::Input(msg) | CliError::Budget(msg)) = &e;
            eprintln!("gengraph: {msg}");
            e.code()
        }
    }
}
