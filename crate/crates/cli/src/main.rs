// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `twok2`: command-line access to the 2K2-free graph algorithms.
//!
//! Exit status 0 means the answer was computed, 1 that the property asked
//! about does not hold (the report carries the certificate), and 2 a usage,
//! input or precondition error.

mod commands;
mod report;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use twok2::graph::{parse_dimacs, parse_graph};
use twok2::Graph;

use report::{Report, Status};

#[derive(Parser)]
#[command(name = "twok2", version, about = "Separator-based algorithms for 2K2-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Seed for commands that draw random graphs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args, Clone)]
struct Input {
    /// Graph file; standard input when absent or `-`.
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Paper,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SubclassArg {
    C3c4,
    C3c5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Split,
    Rejection,
    Exhaustive,
    Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    MinimalSeparators,
    Mis,
    MinFvs,
    MinConnectedSeparator,
    ThreeColor,
}

#[derive(Subcommand)]
enum Command {
    /// Decide 2K2-freeness with a witness, forbidden shape and recursion trace.
    Recognize(Input),
    /// List all minimal vertex separators.
    Separators {
        #[command(flatten)]
        input: Input,
        /// Report every N(v) of a complete graph as a separator.
        #[arg(long)]
        complete_convention: bool,
    },
    /// Minimum connected vertex separator.
    MinConnectedSeparator {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ModeArg::Paper)]
        mode: ModeArg,
    },
    /// Minimum stable (independent) minimal separator.
    MinStableSeparator(Input),
    /// Minimum clique minimal separator.
    MinCliqueSeparator(Input),
    /// All maximal independent sets.
    Mis(Input),
    /// A maximum independent set.
    MaxIs(Input),
    /// A minimum vertex cover, or all minimal ones with `--all`.
    MinVc {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        all: bool,
    },
    /// Decide 3-colourability.
    ThreeColor(Input),
    /// Minimum feedback vertex set for the (2K2, C3, C4)- and (2K2, C3, C5)-free subclasses.
    Fvs {
        #[command(flatten)]
        input: Input,
        /// Skip classification and use this subclass's algorithm.
        #[arg(long, value_enum)]
        subclass: Option<SubclassArg>,
    },
    /// Write generated graphs as edge lists.
    Generate {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Clique share of the vertices for `split`.
        #[arg(long, default_value_t = 0.5)]
        clique_fraction: f64,
        /// Edge probability: cross edges for `split`, all pairs for `rejection`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        max_tries: usize,
        /// Keep only 2K2-free graphs in `exhaustive`.
        #[arg(long)]
        two_k2_free: bool,
    },
    /// Run a brute-force oracle.
    Oracle {
        #[arg(value_enum)]
        which: OracleArg,
        #[command(flatten)]
        input: Input,
    },
    /// Compare every algorithm with its oracle on small graphs.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Time an algorithm on generated graphs of growing size.
    Bench {
        target: String,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', default_value = "100,200,400")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = twok2::bench::MIN_RUNS)]
        runs: usize,
    },
}

fn read_graph(input: &Input, format: Format) -> Result<Graph, String> {
    let mut text = String::new();
    match &input.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
        }
    }
    let parsed = match format {
        Format::Edgelist => parse_graph(&text),
        Format::Dimacs => parse_dimacs(&text),
    };
    parsed.map_err(|e| e.to_string())
}

fn emit(report: &Report, output: Output) {
    let mut stdout = std::io::stdout().lock();
    match output {
        Output::Json => {
            let text = serde_json::to_string_pretty(report).expect("report serializes");
            let _ = writeln!(stdout, "{text}");
        }
        Output::Text => {
            for line in &report.text {
                let _ = writeln!(stdout, "{line}");
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = commands::name(&cli.command);
    let report = match commands::input_of(&cli.command) {
        Some(input) => match read_graph(input, cli.format) {
            Ok(g) => commands::run(&cli.command, Some(&g), cli.seed),
            Err(message) => {
                eprintln!("twok2: {message}");
                let mut r = Report::new(name, None);
                r.status = Status::Error;
                r.result = serde_json::json!({ "error": { "kind": "input", "message": message } });
                r
            }
        },
        None => commands::run(&cli.command, None, cli.seed),
    };
    if report.status == Status::Error {
        if let Some(line) = report.text.first() {
            eprintln!("twok2: {line}");
        }
    }
    if report.status != Status::Error || cli.output == Output::Json {
        emit(&report, cli.output);
    }
    ExitCode::from(report.status.exit_code())
}
