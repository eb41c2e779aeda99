use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degen_pga::cli::{self, CheckOptions, CliError, EvalOptions, TableKind};
use degen_pga::regressive::Backend;
use degen_pga::{DualityConfig, DualityMode};

#[derive(Parser)]
#[command(name = "degen-pga", version, about = "Duality-neutral PGA calculator")]
#[command(
    after_help = "Operators, loosest first: + -, & (regressive), ^ (wedge), \
* (geometric), then prefix - ! J Jinv H Hinv P.\n\
Blades: e023, e^03 (dual algebra), I (pseudoscalar), e^ (dual scalar unit)."
)]
struct Args {
    /// Metric signature as p,q,r; null generators come first.
    #[arg(long, global = true, default_value = "3,0,1")]
    signature: String,
    /// Algebra that blade literals belong to.
    #[arg(long, global = true, value_enum, default_value_t = Algebra::Plane)]
    algebra: Algebra,
    /// How mixed-tag products are handled.
    #[arg(long, global = true, env = "DEGEN_PGA_MODE", default_value = "strict")]
    duality_mode: DualityMode,
    /// Regressive product implementation used by `&`.
    #[arg(long, global = true, default_value = "j")]
    backend: Backend,
    /// Ignore duality tags entirely.
    #[arg(long, global = true)]
    no_dual_tags: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Plane,
    Point,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the result.
    Eval {
        expr: String,
        /// Also print the geometric reading of a homogeneous result.
        #[arg(long)]
        describe: bool,
    },
    /// Print a duality map or Cayley table as TSV.
    Table {
        /// One of P, J, H, gp, wedge.
        kind: TableKind,
    },
    /// Run the golden-table and backend cross-checks.
    Check {
        /// Replacement `blade<TAB>image` fixture for the H table.
        #[arg(long)]
        golden_h: Option<PathBuf>,
        /// Replacement fixture for the J table.
        #[arg(long)]
        golden_j: Option<PathBuf>,
    },
}

fn run(args: Args) -> Result<String, CliError> {
    let sig = cli::parse_signature(&args.signature)?;
    let cfg = DualityConfig {
        mode: args.duality_mode,
        enabled: !args.no_dual_tags,
        ..DualityConfig::default()
    };
    let _ = cfg.install_global();
    match args.command {
        Command::Eval { expr, describe } => {
            let opts = EvalOptions {
                sig,
                cfg,
                backend: args.backend,
                literals_dual: matches!(args.algebra, Algebra::Point),
            };
            let value = cli::evaluate(&expr, &opts)?;
            let mut out = value.to_string();
            if let Some(text) = value.describe().filter(|_| describe) {
                out = format!("{out}\n{text}");
            }
            Ok(out)
        }
        Command::Table { kind } => Ok(cli::cmd_table(kind, sig).trim_end().to_string()),
        Command::Check { golden_h, golden_j } => {
            let mut opts = CheckOptions::default();
            if let Some(path) = golden_h {
                opts.golden_h = cli::load_golden(&path)?;
            }
            if let Some(path) = golden_j {
                opts.golden_j = cli::load_golden(&path)?;
            }
            let report = cli::run_check(&opts);
            if report.passed() {
                Ok(report.to_string())
            } else {
                Err(CliError::Check(report))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Check(report)) => {
            println!("{report}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("degen-pga: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
