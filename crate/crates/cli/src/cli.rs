//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wsn_core::harness::DEFAULT_SEEDS;
use wsn_core::protocols::Protocol;

use crate::commands::{cmd_analyze, cmd_compare, cmd_simulate};
use crate::config::{pair, parse_config, ResolvedConfig};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "wsnsim",
    version,
    about = "Clustered wireless sensor network simulator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one protocol on one seed and write its per-round CSV.
    Simulate {
        #[arg(long, default_value = "leach")]
        protocol: Protocol,
        #[command(flatten)]
        common: Common,
    },
    /// Run several protocols over a seed range and write a comparison.
    Compare {
        /// Comma-separated or repeated; defaults to all protocols.
        #[arg(long, value_delimiter = ',')]
        protocol: Vec<Protocol>,
        /// Inclusive range `A..B`, or a single seed.
        #[arg(long, value_parser = parse_seeds)]
        seeds: Option<SeedList>,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate the closed-form cluster-count and distance expressions.
    Analyze {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Flat `key = value` configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Override a config key; may be repeated.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub rounds: Option<u64>,
    /// Base-station position `X,Y`.
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub bs: Option<String>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
}

impl Common {
    /// Dedicated flags are applied after `--set`.
    pub fn resolve(&self) -> Result<ResolvedConfig, CliError> {
        let mut overrides = self.set.clone();
        overrides.extend(self.seed.map(|s| pair("seed", s)));
        overrides.extend(self.rounds.map(|r| pair("max_rounds", r)));
        overrides.extend(self.bs.as_deref().map(|b| pair("bs", b)));
        parse_config(self.config.as_deref(), &overrides)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedList(pub Vec<u64>);

pub fn parse_seeds(s: &str) -> Result<SeedList, String> {
    let bad = || format!("expected `A..B` or a single seed, got `{s}`");
    match s.split_once("..") {
        None => s
            .trim()
            .parse()
            .map(|v| SeedList(vec![v]))
            .map_err(|_| bad()),
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(format!("empty seed range `{s}`"));
            }
            Ok(SeedList((a..=b).collect()))
        }
    }
}

/// Executes a parsed command and returns what it prints on stdout.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Simulate { protocol, common } => {
            let cfg = common.resolve()?;
            let path = cmd_simulate(&cfg, *protocol, &common.out)?;
            Ok(format!("wrote {}\n", path.display()))
        }
        Command::Compare {
            protocol,
            seeds,
            common,
        } => {
            let cfg = common.resolve()?;
            let protocols = if protocol.is_empty() {
                Protocol::ALL.to_vec()
            } else {
                protocol.clone()
            };
            let seeds = match (seeds, common.seed) {
                (Some(s), _) => s.0.clone(),
                (None, Some(s)) => vec![s],
                (None, None) => DEFAULT_SEEDS.collect(),
            };
            cmd_compare(&cfg, &protocols, &seeds, &common.out)
        }
        Command::Analyze { common } => {
            let cfg = common.resolve()?;
            Ok(cmd_analyze(&cfg, &common.out)?.to_text())
        }
    }
}

/// Full process behavior: parse, run, print, map to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("wsnsim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
