use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tecs::solver::{Model, SeparationMode};
use tecs_cli::commands::{
    self, GenerateArgs, GenerateKind, ReportArgs, SolveArgs, VerifyArgs, VerifySuite,
};
use tecs_cli::records::records_to_string;
use tecs_cli::report::GroupBy;

/// Maximum-weight 2-edge-connected subgraph toolkit.
#[derive(Parser)]
#[command(name = "tecs", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Basic,
    Strengthened,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeparationArg {
    Integer,
    Fractional,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Dimension,
    Lattice,
    Facets,
    Cutpoints,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupByArg {
    Auto,
    Dim,
    N,
}

#[derive(Subcommand)]
enum Command {
    /// Generate instance files.
    Generate {
        #[command(subcommand)]
        kind: GenerateCommand,
    },
    /// Solve instances with one model/separation variant.
    Solve {
        /// Instance files.
        #[arg(required = true)]
        instances: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "basic")]
        model: ModelArg,
        #[arg(long, value_enum, default_value = "integer")]
        separation: SeparationArg,
        /// Time limit per instance, in seconds.
        #[arg(long, default_value_t = 600.0)]
        time_limit: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Most-violated rows added per family per separation round.
        #[arg(long, default_value_t = 20)]
        cut_cap: usize,
        /// Also write the records to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Machine-check the polyhedral results on the built-in corpus.
    Verify {
        /// Restrict to one suite.
        #[arg(long, value_enum, default_value = "all")]
        only: SuiteArg,
        /// Additional instance files to include.
        instances: Vec<PathBuf>,
    },
    /// Aggregate solve CSVs into a median-runtime table and SVG plot.
    Report {
        /// Input CSV files from `solve --csv`.
        #[arg(required = true)]
        csv: Vec<PathBuf>,
        #[arg(long, default_value = "report.svg")]
        out_svg: PathBuf,
        #[arg(long, default_value = "report_aggregated.csv")]
        out_csv: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        group_by: GroupByArg,
    },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Sparsified k-nearest-neighbor graphs.
    Knn {
        #[arg(long, default_value_t = 150)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 0.8)]
        alpha: f64,
        #[arg(long, default_value_t = 15)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "instances")]
        out_dir: PathBuf,
        /// Redraw instances whose optimum is empty, whole, or spanning.
        #[arg(long)]
        reject_trivial: bool,
    },
    /// Rings of small complete graphs.
    Kncycles {
        #[arg(long, default_value_t = 10)]
        ell: usize,
        #[arg(long, default_value_t = 15)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "instances")]
        out_dir: PathBuf,
        #[arg(long)]
        reject_trivial: bool,
    },
    /// Complete graphs with uniform integer weights.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = -10)]
        weight_lo: i64,
        #[arg(long, default_value_t = 3)]
        weight_hi: i64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "instances")]
        out_dir: PathBuf,
        #[arg(long)]
        reject_trivial: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Generate { kind } => {
            let args = match kind {
                GenerateCommand::Knn { n, k, alpha, count, seed, out_dir, reject_trivial } => {
                    GenerateArgs {
                        kind: GenerateKind::Knn { n, k, alpha },
                        count,
                        seed,
                        out_dir,
                        reject_trivial,
                    }
                }
                GenerateCommand::Kncycles { ell, count, seed, out_dir, reject_trivial } => {
                    GenerateArgs {
                        kind: GenerateKind::KnCycles { ell },
                        count,
                        seed,
                        out_dir,
                        reject_trivial,
                    }
                }
                GenerateCommand::Complete {
                    n,
                    weight_lo,
                    weight_hi,
                    count,
                    seed,
                    out_dir,
                    reject_trivial,
                } => GenerateArgs {
                    kind: GenerateKind::Complete { n, weight_lo, weight_hi },
                    count,
                    seed,
                    out_dir,
                    reject_trivial,
                },
            };
            let files = commands::cmd_generate(&args)?;
            for file in files {
                println!("{}", file.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { instances, model, separation, time_limit, seed, cut_cap, csv } => {
            let args = SolveArgs {
                instances,
                model: match model {
                    ModelArg::Basic => Model::Basic,
                    ModelArg::Strengthened => Model::Strengthened,
                },
                separation: match separation {
                    SeparationArg::Integer => SeparationMode::IntegerOnly,
                    SeparationArg::Fractional => SeparationMode::Fractional,
                },
                time_limit,
                seed,
                cut_cap,
                csv_out: csv,
            };
            let (records, all_optimal) = commands::cmd_solve(&args)?;
            print!("{}", records_to_string(&records)?);
            // Distinct exit code when any run hit the time limit.
            Ok(if all_optimal { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Verify { only, instances } => {
            let args = VerifyArgs {
                only: match only {
                    SuiteArg::All => VerifySuite::All,
                    SuiteArg::Dimension => VerifySuite::Dimension,
                    SuiteArg::Lattice => VerifySuite::Lattice,
                    SuiteArg::Facets => VerifySuite::Facets,
                    SuiteArg::Cutpoints => VerifySuite::CutPoints,
                },
                instances,
            };
            let outcome = commands::cmd_verify(&args)?;
            for line in &outcome.lines {
                println!("{line}");
            }
            println!(
                "verify: {} failures, {} skipped ({})",
                outcome.failures,
                outcome.skipped,
                commands::oracle_budget_note()
            );
            Ok(if outcome.failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Report { csv, out_svg, out_csv, group_by } => {
            let args = ReportArgs {
                csv_paths: csv,
                out_svg,
                out_csv,
                group_by: match group_by {
                    GroupByArg::Auto => None,
                    GroupByArg::Dim => Some(GroupBy::DimensionBucket),
                    GroupByArg::N => Some(GroupBy::VertexCount),
                },
            };
            commands::cmd_report(&args)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
