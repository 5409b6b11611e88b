use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use affine_quiver::cli::{run, OutputFormat, RunConfig};

/// Quiver of the complex algebra of the affine monoid of a finite
/// commutative ring.
#[derive(Parser)]
#[command(name = "affine-quiver", version)]
struct Args {
    /// Ring expression: atoms Z/<n>, GF(<q>) or table:<path>, joined by " x ".
    ring: Option<String>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cross-check the closed form against the brute-force computation on
    /// the explicit monoid (each local factor must stay within the size
    /// bound).
    #[arg(long)]
    oracle: bool,

    /// Verify structural invariants of the computed quivers.
    #[arg(long)]
    check_invariants: bool,

    /// Write the output to a file (atomically) instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,

    /// Table-ring JSON file; shorthand for the expression `table:<path>`.
    #[arg(long, conflicts_with = "ring")]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let ring_spec = match (args.ring, args.table) {
        (Some(spec), None) => spec,
        (None, Some(path)) => format!("table:{}", path.display()),
        (None, None) => {
            eprintln!("error: a ring expression or --table is required");
            return ExitCode::from(2);
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let config = RunConfig {
        ring_spec,
        format: match args.format {
            Format::Text => OutputFormat::Text,
            Format::Dot => OutputFormat::Dot,
            Format::Json => OutputFormat::Json,
        },
        oracle: args.oracle,
        check_invariants: args.check_invariants,
        output: args.output,
    };
    ExitCode::from(run(&config) as u8)
}
