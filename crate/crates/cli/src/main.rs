use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use curvadd::cover::OracleMode;
use curvadd_cli::commands::{self, caps_from_env, BoundClass, SearchMode, ValuationField};
use curvadd_cli::CliError;

/// Additive functions vanishing multiplicatively on plane curves.
#[derive(Parser)]
#[command(name = "curvadd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a curve file.
    Analyze {
        #[arg(long)]
        curve: PathBuf,
        /// Largest extension degree searched for singular points.
        #[arg(long, default_value_t = 2)]
        singular_ext: usize,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OracleArg::Auto)]
        oracle: OracleArg,
    },
    /// Exact evaluation of a zero-forcing bound.
    #[command(group(ArgGroup::new("which").required(true).args(["d", "class"])))]
    Bound {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Curve degree for the general inequality.
        #[arg(long)]
        d: Option<u64>,
        #[arg(long, value_enum)]
        class: Option<ClassArg>,
    },
    /// Decide whether a nonzero additive map covers the curve's points.
    Search {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Hyperplane)]
        mode: ModeArg,
    },
    /// Valuations and the additive function h on rational function fields.
    Valuation(ValuationArgs),
    /// Compare published claims with computed results.
    VerifyPaper,
}

#[derive(Args)]
#[command(group(ArgGroup::new("action").required(true).args(["demo", "check_axioms", "ext2", "padic"])))]
struct ValuationArgs {
    #[arg(long)]
    demo: bool,
    /// Number of random samples for the axiom checks.
    #[arg(long, value_name = "N")]
    check_axioms: Option<usize>,
    /// Polynomials P and Q as comma-separated coefficients, constant first.
    #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
    ext2: Option<Vec<String>>,
    /// A rational number and a prime.
    #[arg(long, num_args = 2, value_names = ["RATIONAL", "P"], allow_hyphen_values = true)]
    padic: Option<Vec<String>>,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coefficient field: Q or a prime; repeatable.
    #[arg(long, value_name = "FIELD")]
    over: Vec<ValuationField>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Auto,
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Conic,
    Elliptic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Hyperplane,
    Exhaustive,
    Both,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let caps = caps_from_env()?;
    match cli.command {
        Command::Analyze {
            curve,
            singular_ext,
            json,
            oracle,
        } => {
            let oracle = match oracle {
                OracleArg::Auto => OracleMode::Auto,
                OracleArg::On => OracleMode::On,
                OracleArg::Off => OracleMode::Off,
            };
            commands::cmd_analyze(out, &curve, singular_ext, json.as_deref(), oracle, caps)
        }
        Command::Bound { p, k, d, class } => {
            let class = class.map(|c| match c {
                ClassArg::Conic => BoundClass::Conic,
                ClassArg::Elliptic => BoundClass::Elliptic,
            });
            commands::cmd_bound(out, p, k, d, class)
        }
        Command::Search { curve, mode } => {
            let mode = match mode {
                ModeArg::Hyperplane => SearchMode::Hyperplane,
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Both => SearchMode::Both,
            };
            commands::cmd_search(out, &curve, mode, caps)
        }
        Command::Valuation(v) => {
            if v.demo {
                commands::cmd_valuation_demo(out)
            } else if let Some(n) = v.check_axioms {
                commands::cmd_valuation_axioms(out, n, v.seed, &v.over)
            } else if let Some(pq) = &v.ext2 {
                commands::cmd_valuation_ext2(out, &pq[0], &pq[1], v.samples, v.seed, &v.over)
            } else if let Some(rp) = &v.padic {
                commands::cmd_valuation_padic(out, &rp[0], &rp[1])
            } else {
                unreachable!("clap enforces one action")
            }
        }
        Command::VerifyPaper => commands::cmd_verify_paper(out, caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("curvadd: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
