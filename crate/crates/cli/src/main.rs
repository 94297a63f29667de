//! `nakayama`: decide finite global dimension and Gorensteinness of connected
//! Nakayama algebras from their Kupisch series.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nakayama_core::census::{verify_all_with_jobs, CensusConfig, CheckId};
use nakayama_core::report::{analyze, Sections};

const INVALID_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "nakayama", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolution quiver, cycles and decisions for one algebra.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Add brute-force projective/injective dimensions.
        #[arg(long)]
        oracle: bool,
        /// Add the Cartan matrix, determinant, rank and Smith normal form.
        #[arg(long)]
        cartan: bool,
        /// Add the retraction chain.
        #[arg(long)]
        retract: bool,
    },
    /// Analysis with the Cartan section.
    Cartan {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Analysis with the retraction chain.
    Retract {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Analysis with the brute-force homological oracle.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exhaustively verify every small algebra against the oracle.
    Census(CensusArgs),
    /// List the census check identifiers.
    Checks,
}

#[derive(Args)]
struct InputArgs {
    /// Kupisch series, e.g. `2,3,3` or `2 3 3`.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    sequence: Vec<String>,
    /// Read one series per line; one report per line of output.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 9)]
    c_max: usize,
    /// Comma-separated check identifiers (default: all).
    #[arg(long)]
    checks: Option<String>,
    /// Worker threads.
    #[arg(long, env = "ANALYZER_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Largest search space for bounded enumerations.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    format: Format,
    /// Leave the elapsed time out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            input,
            oracle,
            cartan,
            retract,
        } => run_analysis(
            &input,
            Sections {
                oracle,
                cartan,
                retraction: retract,
            },
        ),
        Command::Cartan { input } => run_analysis(
            &input,
            Sections {
                cartan: true,
                ..Default::default()
            },
        ),
        Command::Retract { input } => run_analysis(
            &input,
            Sections {
                retraction: true,
                ..Default::default()
            },
        ),
        Command::Oracle { input } => run_analysis(
            &input,
            Sections {
                oracle: true,
                ..Default::default()
            },
        ),
        Command::Census(args) => run_census(&args),
        Command::Checks => {
            for id in CheckId::ALL {
                println!("{:<30} {}", id.as_str(), id.description());
            }
            Ok(ExitCode::SUCCESS)
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(INVALID_INPUT)
    })
}

fn run_analysis(input: &InputArgs, sections: Sections) -> Result<ExitCode, String> {
    let lines: Vec<String> = match &input.file {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect(),
        None => vec![input.sequence.join(" ")],
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut status = ExitCode::SUCCESS;
    for (k, line) in lines.iter().enumerate() {
        match analyze(line, sections) {
            Ok(report) => {
                let rendered = match input.format {
                    Format::Structured => report.to_json() + "\n",
                    Format::Text if k > 0 => format!("\n{report}"),
                    Format::Text => report.to_string(),
                };
                out.write_all(rendered.as_bytes())
                    .map_err(|e| e.to_string())?;
            }
            Err(e) => {
                eprintln!("error: invalid series `{line}`: {e}");
                status = ExitCode::from(INVALID_INPUT);
            }
        }
    }
    Ok(status)
}

fn run_census(args: &CensusArgs) -> Result<ExitCode, String> {
    let mut config = CensusConfig::new(args.n_max, args.c_max).map_err(|e| e.to_string())?;
    if let Some(list) = &args.checks {
        config = config.with_checks(list).map_err(|e| e.to_string())?;
    }
    config.budget = args.budget;
    let report = verify_all_with_jobs(&config, args.jobs).map_err(|e| e.to_string())?;
    match args.format {
        Format::Structured => println!("{}", report.to_json(!args.no_timing)),
        Format::Text => {
            println!(
                "algebras checked: {} (n <= {}, c <= {})",
                report.algebras_checked, config.n_max, config.c_max
            );
            for (id, stats) in &report.per_check {
                println!(
                    "{:<30} pass {:>7}  fail {:>5}  skip {:>5}  n/a {:>7}  findings {:>5}",
                    id.as_str(),
                    stats.passes,
                    stats.failures,
                    stats.skips,
                    stats.not_applicable,
                    stats.findings
                );
                for (label, sample) in [
                    ("counterexample", &stats.first_counterexample),
                    ("finding", &stats.first_finding),
                    ("skipped", &stats.first_skip),
                ] {
                    if let Some(s) = sample {
                        println!("    {label}: ({}) {}", s.series, s.detail);
                    }
                }
            }
            println!(
                "failures: {}  findings: {}  skips: {}",
                report.total_failures(),
                report.total_findings(),
                report.total_skips()
            );
            if !args.no_timing {
                println!("elapsed: {} ms", report.elapsed.as_millis());
            }
        }
    }
    Ok(if report.is_success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
