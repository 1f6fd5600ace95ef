//! `periodica`: counting configurations of `A^G` by least period.

mod commands;
mod error;
mod source;
mod verify;

use std::io::Write;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use periodica::Exec;

use crate::error::{exit, CliError};
use crate::source::{GroupSource, SubgroupSpec};

#[derive(Debug, Parser)]
#[command(name = "periodica", version, about = "Count configurations of the full shift A^G by least period")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format (default: csv for `table`, text for `verify`, json otherwise)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads; 1 runs everything sequentially
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Enumeration budget for brute-force work (overrides PERIODICA_BUDGET)
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ψ_H: configurations whose stabilizer is exactly H
    Psi(CountArgs),
    /// α_[H]: orbits whose stabilizers are conjugate to H
    Alpha(CountArgs),
    /// Small values of α_[1](Q; q) for the quotients of order at most 7
    Table {
        #[arg(long, default_value_t = 5, value_name = "Q")]
        q_max: u64,
    },
    /// Every (quotient, q) with α at most --alpha-max, with a scan certificate
    Classify {
        #[arg(long, default_value_t = 10, value_name = "N")]
        alpha_max: u64,
    },
    /// Orbit-class factors of the automorphism group of A^G
    Aut {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long, value_name = "Q")]
        q: u64,
    },
    /// Subgroups of small index of a presented group, up to conjugacy
    Lowindex {
        #[arg(long, value_name = "TEXT")]
        presentation: String,
        #[arg(long, value_name = "N")]
        max_index: usize,
    },
    /// Aperiodic necklaces (Lyndon words) of length n over q letters
    Necklaces {
        #[arg(long, value_name = "N")]
        n: u64,
        #[arg(long, value_name = "Q")]
        q: u64,
        /// Also list the Lyndon words
        #[arg(long)]
        list: bool,
    },
    /// Run formula-versus-oracle checks and identities on a group
    Verify(verify::VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    source: GroupSource,
    #[command(flatten)]
    subgroup: SubgroupSpec,
    /// Alphabet size, or an inclusive range such as 2..5
    #[arg(long, value_name = "Q", value_parser = parse_q_range)]
    q: RangeInclusive<u64>,
}

pub fn parse_q_range(text: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("bad alphabet size `{s}`"));
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => num(text)?..=num(text)?,
    };
    if *range.start() < 2 {
        return Err("alphabet size must be at least 2".into());
    }
    if range.is_empty() {
        return Err(format!("empty range `{text}`"));
    }
    Ok(range)
}

pub struct Context {
    pub format: Option<Format>,
    pub budget: u64,
    pub exec: Exec,
}

fn budget(common: &Common) -> Result<u64, CliError> {
    if let Some(b) = common.budget {
        return Ok(b);
    }
    match std::env::var("PERIODICA_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::parse("reading PERIODICA_BUDGET", format!("bad value `{v}`"))),
        Err(_) => Ok(periodica::oracle::DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let exec = if cli.common.jobs == Some(1) { Exec::Sequential } else { Exec::default() };
    let ctx = Context { format: cli.common.format, budget: budget(&cli.common)?, exec };
    match cli.command {
        Command::Psi(args) => commands::psi(&ctx, &args, false),
        Command::Alpha(args) => commands::psi(&ctx, &args, true),
        Command::Table { q_max } => commands::table(&ctx, q_max),
        Command::Classify { alpha_max } => commands::classify(&ctx, alpha_max),
        Command::Aut { source, q } => commands::aut(&ctx, &source, q),
        Command::Lowindex { presentation, max_index } => commands::lowindex(&ctx, &presentation, max_index),
        Command::Necklaces { n, q, list } => commands::necklaces(&ctx, n, q, list),
        Command::Verify(args) => verify::run(&ctx, &args),
    }
    .map(|out| (out.text, out.code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.common.jobs.unwrap_or(0);
    let result = if jobs == 0 { run(cli) } else { periodica::exec::with_threads(jobs, || run(cli)) };
    match result {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(exit::CHECK_FAILED as u8);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
