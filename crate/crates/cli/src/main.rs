use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rfsemi::census::{self, CensusParams, CensusSummary, Checkpoint};
use rfsemi::configenum::for_each_config;
use rfsemi::rfmatrix::DEFAULT_CAP;
use rfsemi::{classify_pf, count_configs, golden, rf_matrices, NumericalSemigroup};

mod report;

/// Census sizes above this need `--i-have-hours` at five or more generators.
const DESK_SCALE_MAX_GEN: i64 = 100;

#[derive(Parser)]
#[command(
    name = "rfsemi",
    version,
    about = "Numerical semigroups and row-factorization matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the basic invariants of a semigroup.
    Analyze {
        gens: String,
        #[arg(long)]
        json: bool,
    },
    /// Print every RF-matrix of a pseudo-Frobenius number.
    Rf {
        gens: String,
        f: i64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Split PF(S) into good and bad numbers.
    Classify {
        gens: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate admissible zero configurations.
    Configs {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustive census over bounded minimal generators.
    Census(CensusArgs),
    /// Continue an interrupted census.
    Resume {
        #[arg(long)]
        checkpoint: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        stop_after: Option<usize>,
    },
    /// Replay the published reference values.
    VerifyPaper,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    embdim: usize,
    #[arg(long)]
    max_gen: i64,
    /// Keep every semigroup, not only the almost symmetric ones.
    #[arg(long, conflicts_with = "almost_symmetric")]
    all: bool,
    #[arg(long)]
    almost_symmetric: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value = "census.jsonl")]
    out: PathBuf,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    rf_cap: usize,
    /// Stop after this many partitions; continue later with `resume`.
    #[arg(long)]
    stop_after: Option<usize>,
    #[arg(long)]
    i_have_hours: bool,
}

enum Failure {
    Usage(String),
    Findings,
}

fn semigroup(gens: &str) -> Result<NumericalSemigroup, Failure> {
    gens.parse()
        .map_err(|e: rfsemi::SemigroupError| Failure::Usage(e.to_string()))
}

fn print_summary(summary: &CensusSummary) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(summary).expect("summary serializes");
    println!("{text}");
    if summary.is_clean() {
        Ok(())
    } else {
        Err(Failure::Findings)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::Usage(e.to_string());
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Analyze { gens, json } => {
            let s = semigroup(&gens)?;
            if json {
                writeln!(stdout, "{}", report::analyze_json(&s)).map_err(|e| usage(&e))?;
            } else {
                write!(stdout, "{}", report::analyze_text(&s)).map_err(|e| usage(&e))?;
            }
        }
        Command::Rf { gens, f, cap } => {
            let s = semigroup(&gens)?;
            let ms = rf_matrices(&s, f, cap).map_err(|e| usage(&e))?;
            write!(stdout, "{}", report::matrices_text(&ms)).map_err(|e| usage(&e))?;
        }
        Command::Classify { gens, json } => {
            let s = semigroup(&gens)?;
            let c = classify_pf(&s).map_err(|e| usage(&e))?;
            if json {
                writeln!(stdout, "{}", report::classify_json(&s, &c)).map_err(|e| usage(&e))?;
            } else {
                write!(stdout, "{}", report::classify_text(&s, &c)).map_err(|e| usage(&e))?;
            }
        }
        Command::Configs { order, count_only } => {
            if count_only {
                let n = count_configs(order).map_err(|e| usage(&e))?;
                writeln!(stdout, "{n}").map_err(|e| usage(&e))?;
            } else {
                let mut first = true;
                let mut err = None;
                for_each_config(order, |c| {
                    if err.is_some() {
                        return;
                    }
                    let sep = if first { "" } else { "\n" };
                    first = false;
                    if let Err(e) = write!(stdout, "{sep}{}", report::config_text(&c)) {
                        err = Some(e);
                    }
                })
                .map_err(|e| usage(&e))?;
                if let Some(e) = err {
                    return Err(usage(&e));
                }
            }
        }
        Command::Census(args) => {
            if args.embdim >= 5 && args.max_gen > DESK_SCALE_MAX_GEN && !args.i_have_hours {
                return Err(Failure::Usage(format!(
                    "--max-gen above {DESK_SCALE_MAX_GEN} at embdim {} takes hours; pass --i-have-hours",
                    args.embdim
                )));
            }
            let mut p = CensusParams::new(args.embdim, args.max_gen, args.out);
            p.require_almost_symmetric = !args.all;
            if let Some(j) = args.jobs {
                p.workers = j;
            }
            if let Some(c) = args.checkpoint {
                p.checkpoint_path = c;
            }
            p.rf_cap = args.rf_cap;
            p.partition_limit = args.stop_after;
            drop(stdout);
            let summary = census::run_census(&p).map_err(|e| usage(&e))?;
            return print_summary(&summary);
        }
        Command::Resume {
            checkpoint,
            jobs,
            stop_after,
        } => {
            let cp = Checkpoint::load(&checkpoint).map_err(|e| usage(&e))?;
            let mut p = cp.to_params(&checkpoint, 1);
            p.workers = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            p.partition_limit = stop_after;
            drop(stdout);
            let summary = census::resume(&p).map_err(|e| usage(&e))?;
            return print_summary(&summary);
        }
        Command::VerifyPaper => {
            let checks = golden::run_all();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(stdout, "{status} {} ({:.2}s): {}", c.name, c.seconds, c.detail).map_err(|e| usage(&e))?;
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Findings);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Findings) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
