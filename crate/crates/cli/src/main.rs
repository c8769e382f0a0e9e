mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eulerian_cert::conditions::GroupKind;

use render::Format;

/// Environment variable overriding the worker-thread count.
const WORKERS_ENV: &str = "EULERIAN_CERT_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "eulerian-cert", version, about = "Exact Eulerian-number certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler characteristics and Hodge-Tate multiplicities.
    Hodge(HodgeArgs),
    /// Adjoint Hodge numbers and the numerical conditions.
    Conditions(ConditionsArgs),
    /// Solve and classify the wedge-power equation.
    Classify(ClassifyArgs),
    /// The a(i)/d(i) sequences, descent and admissibility.
    Sequences(SequencesArgs),
    /// Run the inequality battery.
    Battery(BatteryArgs),
}

#[derive(Debug, Args)]
pub struct HodgeArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub d: u64,
}

#[derive(Debug, Args)]
pub struct ConditionsArgs {
    #[arg(long, required_unless_present = "scan")]
    pub n: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub d: u64,
    /// GL, GSp or GO; all three when omitted.
    #[arg(long)]
    pub group: Option<GroupKind>,
    #[arg(long, requires = "dim_x")]
    pub c: Option<u64>,
    #[arg(long)]
    pub dim_x: Option<u64>,
    /// Smallest c passing both conditions, up to --c-max.
    #[arg(long, requires = "dim_x", conflicts_with = "c")]
    pub find_min_c: bool,
    #[arg(long, default_value_t = 1_000_000_000)]
    pub c_max: u64,
    #[arg(long)]
    pub second_moment: bool,
    #[arg(long)]
    pub a0_bound: bool,
    #[arg(long)]
    pub squared: bool,
    /// Key inequality over a rectangle of (n, d) and all groups.
    #[arg(long, conflicts_with_all = ["c", "find_min_c", "second_moment", "a0_bound", "squared"])]
    pub scan: bool,
    #[arg(long, default_value_t = 2)]
    pub n_lo: u32,
    #[arg(long, default_value_t = 50)]
    pub n_hi: u32,
    #[arg(long, default_value_t = 1)]
    pub d_lo: u64,
    #[arg(long, default_value_t = 100)]
    pub d_hi: u64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub m_max: u64,
    /// Defaults to n - 1.
    #[arg(long)]
    pub span_max: Option<u64>,
    #[arg(long)]
    pub d_max: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SequencesArgs {
    #[arg(long)]
    pub i_max: Option<u64>,
    /// Decide whether a triple intersection number is admissible.
    #[arg(long)]
    pub admissible: Option<String>,
    /// Descend from a solution (a, b) to the base case.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    pub descend: Option<Vec<String>>,
    /// All solutions with a <= b <= BOUND.
    #[arg(long, value_name = "BOUND")]
    pub diophantine: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BatteryArgs {
    /// Run only the named entries.
    #[arg(long)]
    pub only: Vec<String>,
    /// List entry names and exit.
    #[arg(long)]
    pub list: bool,
}

fn configure_workers() -> Result<(), String> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = raw
        .parse()
        .ok()
        .filter(|w| *w > 0)
        .ok_or_else(|| format!("{WORKERS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_workers() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let rendered = match &cli.command {
        Command::Hodge(args) => commands::hodge(args),
        Command::Conditions(args) => commands::conditions(args),
        Command::Classify(args) => commands::classify(args),
        Command::Sequences(args) => commands::sequences(args),
        Command::Battery(args) => commands::battery(args),
    };
    let rendered = match rendered {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = rendered.render(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if rendered.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
