//! `evifuse` command line: hyper-power sets, evidence fusion, entropy and
//! neutrosophic operators.

mod commands;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use evifuse::nfusion::Options;

use commands::{NOp, NopFlags, Query, Rule};

#[derive(Debug, Parser)]
#[command(name = "evifuse", version, about = "Belief fusion on hyper-power sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the hyper-power set of an n-hypothesis frame.
    Hyperset {
        n: usize,
        /// Permit n = 6 (about 7.8 million elements).
        #[arg(long)]
        allow_huge: bool,
        #[arg(long)]
        json: bool,
    },
    /// Combine every source of a scenario file.
    Fuse {
        scenario: PathBuf,
        /// Defaults to `dempster` for dst scenarios and `dsm` for dsm ones.
        #[arg(long, value_enum)]
        rule: Option<Rule>,
        /// Rescale a DSm result to unit total.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        json: bool,
    },
    /// Entropy of one source, or joint and conditional entropy of two.
    Entropy {
        scenario: PathBuf,
        /// Also report the strength-weighted entropy.
        #[arg(long)]
        generalized: bool,
        #[arg(long)]
        json: bool,
    },
    /// Pignistic probability of each source.
    Pignistic {
        scenario: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Belief and plausibility queries, on the fused result when several
    /// sources are present.
    Query {
        scenario: PathBuf,
        #[arg(long = "bel", value_name = "EXPR")]
        bel: Vec<String>,
        #[arg(long = "pl", value_name = "EXPR")]
        pl: Vec<String>,
        /// Condition on this proposition first.
        #[arg(long, value_name = "EXPR")]
        given: Option<String>,
        #[arg(long, value_enum)]
        rule: Option<Rule>,
        #[arg(long)]
        json: bool,
    },
    /// Maximum-entropy mass assignment for an interval probability.
    Interval2bpa {
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long)]
        json: bool,
    },
    /// Turn one neutrosophic report into a mass assignment, or fuse two.
    Nfuse {
        report: PathBuf,
        other: Option<PathBuf>,
        /// Use the constant falsity-granule intersection mass.
        #[arg(long)]
        strict_paper: bool,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify a neutrosophic value such as "(0.6; 0.1; [0.2,0.3])".
    Classify {
        value: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a neutrosophic operator.
    Nop {
        #[arg(value_enum)]
        op: NOp,
        a: String,
        b: Option<String>,
        /// Difference as A ∧ ¬B with the older component formula.
        #[arg(long)]
        legacy_preface_difference: bool,
        /// Probability negation swaps T and F instead of complementing.
        #[arg(long)]
        swap_negation: bool,
    },
}

fn run(cli: Cli) -> error::Result<String> {
    match cli.command {
        Command::Hyperset {
            n,
            allow_huge,
            json,
        } => commands::hyperset(n, allow_huge, json),
        Command::Fuse {
            scenario,
            rule,
            normalize,
            json,
        } => commands::fuse(&scenario, rule, normalize, json),
        Command::Entropy {
            scenario,
            generalized,
            json,
        } => commands::entropy(&scenario, generalized, json),
        Command::Pignistic { scenario, json } => commands::pignistic(&scenario, json),
        Command::Query {
            scenario,
            bel,
            pl,
            given,
            rule,
            json,
        } => commands::query(
            &scenario,
            Query {
                bel: &bel,
                pl: &pl,
                given: given.as_deref(),
                rule,
            },
            json,
        ),
        Command::Interval2bpa { lo, hi, json } => commands::interval2bpa(lo, hi, json),
        Command::Nfuse {
            report,
            other,
            strict_paper,
            normalize,
            json,
        } => commands::nfuse(
            &report,
            other.as_deref(),
            Options { strict_paper },
            normalize,
            json,
        ),
        Command::Classify { value, json } => commands::classify_value(&value, json),
        Command::Nop {
            op,
            a,
            b,
            legacy_preface_difference,
            swap_negation,
        } => commands::nop(
            op,
            &a,
            b.as_deref(),
            NopFlags {
                legacy_difference: legacy_preface_difference,
                swap_negation,
            },
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
