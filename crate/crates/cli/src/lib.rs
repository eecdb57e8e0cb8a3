//! The `pmh` command line.
//!
//! Every subcommand reads graph6 lines (from a file or standard input) and
//! writes one JSON report per graph. Exit status: 0 when every verdict was
//! computed, 1 on any input or precondition error, 2 when a search ran out
//! of budget and nothing worse happened.

use std::fs;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pmh::graph::parse_graph6;
use pmh::{Budget, Error, Graph, Meter};

mod commands;
mod report;
mod survey;

pub use report::{Report, SCHEMA_VERSION};

pub const DEFAULT_MAX_NODES: u64 = 200_000_000;
pub const DEFAULT_TIMEOUT_SECONDS: u64 = 600;

#[derive(Debug, Parser)]
#[command(
    name = "pmh",
    version,
    about = "Perfect matchings and Hamiltonian cycles in line graphs"
)]
pub struct Cli {
    /// Search-node budget per graph (0 = unlimited).
    #[arg(long, global = true, env = "PMH_MAX_NODES", default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
    /// Wall-clock budget per graph in seconds (0 = unlimited).
    #[arg(long, global = true, env = "PMH_TIMEOUT_SECONDS", default_value_t = DEFAULT_TIMEOUT_SECONDS)]
    pub timeout_seconds: u64,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn budget(&self) -> Budget {
        Budget {
            max_nodes: (self.max_nodes > 0).then_some(self.max_nodes),
            timeout: (self.timeout_seconds > 0).then(|| Duration::from_secs(self.timeout_seconds)),
        }
    }
}

/// Where graph6 lines come from.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// graph6 file, one graph per line; `-` or absent reads standard input.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The line graph as graph6, with the table from its vertices to base edges.
    Lg(Source),
    /// Perfect matchings of the input graph.
    PmEnum {
        #[command(flatten)]
        source: Source,
        /// Report only the number of matchings.
        #[arg(long)]
        count_only: bool,
        /// Enumerate the matchings of L(G) instead of G.
        #[arg(long)]
        line_graph: bool,
    },
    /// Cycle and tour searches on the input graph.
    Cycles {
        #[command(subcommand)]
        which: CycleCommand,
    },
    /// Whether every perfect matching lies in a Hamiltonian cycle.
    PmhCheck {
        #[command(flatten)]
        source: Source,
        /// Test L(G) instead of G.
        #[arg(long)]
        line_graph: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Extend a perfect matching of L(G) to a Hamiltonian cycle of L(G).
    Extend {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        method: Method,
        /// JSON list of line-graph edges `[[x, y], ...]`. Defaults to the
        /// first perfect matching of L(G) in enumeration order.
        #[arg(long)]
        matching: Option<PathBuf>,
        /// Start vertex for `arbtrace`. Defaults to the least vertex from
        /// which G is arbitrarily traceable.
        #[arg(long)]
        from: Option<usize>,
    },
    /// Split L(G) of a cubic Hamiltonian G into two Hamiltonian cycles, the
    /// first containing the matching.
    Kotzig {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        matching: Option<PathBuf>,
    },
    /// Graph surgeries.
    Construct {
        #[command(subcommand)]
        which: ConstructCommand,
    },
    /// Test line graphs of a corpus for the PMH property under a filter.
    Survey {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        problem: Problem,
        /// Append-only record of finished graphs; reruns skip them.
        #[arg(long)]
        journal: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print graph6 for a named graph, or every graph of an order.
    ///
    /// `gen complete 5`, `gen prism 6`, `gen all 5`, `gen connected 6 --max-degree 3`.
    Gen {
        name: String,
        params: Vec<usize>,
        /// Degree cap for `all` and `connected`.
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CycleCommand {
    Ham(Source),
    /// A dominating cycle leaving untouched only vertices in `--allow`.
    Domcycle {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',')]
        allow: Vec<usize>,
    },
    Euler(Source),
    Circ(Source),
    Hypoham(Source),
    Arbtrace {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        from: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConstructCommand {
    Yext {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        at: usize,
    },
    Yred {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        triangle: Vec<usize>,
    },
    Prop6 {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        keep: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Subcubic,
    Complete,
    Bipartite,
    Arbtrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    /// r-regular, r >= 4, Hamiltonian, even size.
    P1,
    /// Eulerian, Hamiltonian, even size.
    P2,
    /// Maximum degree 4, Hamiltonian, even size.
    Maxdeg4,
}

/// Run a parsed command line and return the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(status) => status.code(),
        Err(e) => {
            let _ = writeln!(err, "pmh: {e}");
            Status::from_error(&e).code()
        }
    }
}

/// Worst outcome seen so far. Errors outrank an exhausted budget.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Status {
    #[default]
    Ok,
    Inconclusive,
    Failed,
}

impl Status {
    pub(crate) fn from_error(e: &Error) -> Status {
        if e.is_inconclusive() {
            Status::Inconclusive
        } else {
            Status::Failed
        }
    }

    pub(crate) fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Inconclusive => 2,
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, Error> {
    match &cli.command {
        Command::Gen {
            name,
            params,
            max_degree,
        } => {
            for g in commands::generate(name, params, *max_degree)? {
                writeln!(out, "{}", pmh::graph::write_graph6(&g)).map_err(io_error)?;
            }
            Ok(Status::Ok)
        }
        Command::Survey {
            source,
            problem,
            journal,
            threads,
        } => {
            let lines = read_lines(source)?;
            survey::run(
                &lines,
                *problem,
                journal.as_deref(),
                *threads,
                cli.budget(),
                out,
                err,
            )
        }
        _ => per_graph(cli, out, err),
    }
}

/// Apply the command to each input graph, one report per line.
fn per_graph(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, Error> {
    let (name, source) = commands::name_and_source(&cli.command);
    let lines = read_lines(source)?;
    let ctx = commands::Context::load(&cli.command)?;
    let mut status = Status::Ok;
    for (lineno, text) in lines {
        let started = Instant::now();
        let mut meter = Meter::new(cli.budget());
        let result = parse_graph6(&text)
            .and_then(|g: Graph| commands::execute(&cli.command, &ctx, &g, &mut meter));
        match result {
            Ok(body) => {
                let report = Report::new(name, &text, body, meter.nodes(), started.elapsed());
                writeln!(out, "{}", report.to_json()).map_err(io_error)?;
            }
            Err(e) => {
                writeln!(err, "pmh: line {lineno}: {e}").map_err(io_error)?;
                status = status.max(Status::from_error(&e));
            }
        }
    }
    Ok(status)
}

/// Non-blank graph6 lines with their 1-based line numbers.
pub(crate) fn read_lines(source: &Source) -> Result<Vec<(usize, String)>, Error> {
    let reader: Box<dyn BufRead> = match &source.input {
        Some(p) if p.as_os_str() != "-" => {
            Box::new(BufReader::new(fs::File::open(p).map_err(|e| {
                Error::Parameter(format!("{}: {e}", p.display()))
            })?))
        }
        _ => Box::new(BufReader::new(io::stdin())),
    };
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_error)?;
        let t = line.trim();
        if !t.is_empty() {
            lines.push((i + 1, t.to_string()));
        }
    }
    Ok(lines)
}

pub(crate) fn io_error(e: io::Error) -> Error {
    Error::Parameter(format!("i/o: {e}"))
}
