//! `anosov`: decide which rational forms of a graph Lie algebra are Anosov.
//!
//! Exit status: 0 for a positive result, 3 for a negative one (not Anosov),
//! 2 for errors.

mod commands;
mod text;

use anosov_core::{Caps, Graph};
use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "anosov", version, about = "Anosov rational forms of graph Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coherent components, quotient graph, automorphisms and dimensions.
    Analyze(Common),
    /// Verdict for one Galois datum, or for every class with `--datum all`.
    Decide {
        #[command(flatten)]
        common: Common,
        /// `standard`, `all`, or a JSON datum file.
        #[arg(long, default_value = "standard")]
        datum: String,
    },
    /// One verdict per Galois datum class.
    Classify(Common),
    /// Explicit Anosov automorphism of the standard rational form.
    Witness(Common),
    /// Lyndon basis and structure constants.
    Basis(Common),
    /// Eigenvalue exponent vectors of vertex-diagonal automorphisms.
    Weights(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Graph file (JSON or terse edge list); `-` reads stdin.
    #[arg(long)]
    graph: PathBuf,
    /// Nilpotency class.
    #[arg(long, default_value_t = 2)]
    c: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Re-run verdicts through the brute-force oracle and fail on mismatch.
    #[arg(long)]
    cross_check: bool,
    /// First catalog index used when assigning units to components.
    #[arg(long, default_value_t = 0)]
    seed: usize,
    /// Cap overrides, e.g. `aut=720,basis=5000`.
    #[arg(long, default_value = "")]
    caps: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// What a command produced.
pub struct Report {
    pub json: serde_json::Value,
    pub text: String,
    /// False for mathematically negative results.
    pub positive: bool,
}

/// Inputs shared by every command.
pub struct Config {
    pub graph: Graph,
    pub c: usize,
    pub caps: Caps,
    pub cross_check: bool,
    pub seed: usize,
}

fn load(common: &Common) -> Result<Config> {
    let source = if common.graph.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(&common.graph)
            .with_context(|| format!("reading {}", common.graph.display()))?
    };
    let graph = anosov_core::graph::parse_graph(&source)
        .with_context(|| format!("parsing {}", common.graph.display()))?;
    let caps: Caps = common.caps.parse().context("--caps")?;
    Ok(Config {
        graph,
        c: common.c,
        caps,
        cross_check: common.cross_check,
        seed: common.seed,
    })
}

fn run(cli: Cli) -> Result<(Report, Format)> {
    let (common, report) = match &cli.command {
        Command::Analyze(c) => (c, commands::analyze(&load(c)?)?),
        Command::Decide { common, datum } => (common, commands::decide(&load(common)?, datum)?),
        Command::Classify(c) => (c, commands::classify(&load(c)?)?),
        Command::Witness(c) => (c, commands::witness(&load(c)?)?),
        Command::Basis(c) => (c, commands::basis(&load(c)?)?),
        Command::Weights(c) => (c, commands::weights(&load(c)?)?),
    };
    Ok((report, common.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, format)) => {
            let body = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&report.json).expect("JSON values serialise") + "\n"
                }
                Format::Text => report.text,
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let mut out = std::io::stdout().lock();
            if let Err(e) = out.write_all(body.as_bytes()).and_then(|()| out.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: writing output: {e}");
                    return ExitCode::from(2);
                }
            }
            if report.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            if let Some(commands::Negative(msg)) = e.downcast_ref::<commands::Negative>() {
                eprintln!("not Anosov: {msg}");
                return ExitCode::from(3);
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
