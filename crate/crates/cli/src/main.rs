use std::path::PathBuf;
use std::process::ExitCode;

use albert_cli::expr::evaluate;
use albert_cli::sc::{dump_sc, Algebra, Basis, Format};
use albert_cli::verify::{run_verification, Options, Target};
use albert_core::construct::named::{build_named, Name};
use albert_core::sample::DEFAULT_SEED;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "albert", version, about = "Exact computations in split octonions and H3(O)")]
struct Cli {
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Samples per identity sweep.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Corrupt the octonion product (negative control).
    #[arg(long, global = true, hide = true)]
    corrupt_kernel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks.
    Verify {
        #[arg(value_enum, default_value_t = Target::All)]
        target: Target,
    },
    /// Evaluate an expression, e.g. `U((x0*v)[12]; theta(b))`.
    Eval { expr: String },
    /// Export a structure-constant table.
    DumpSc {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long, value_enum, default_value_t = Basis::Cd)]
        basis: Basis,
        #[arg(long = "sc-format", value_enum, default_value_t = Format::Json)]
        sc_format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimensions of the named subalgebras.
    Dims,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.corrupt_kernel {
        albert_core::composition::oct::set_fault_injection(true);
    }
    match cli.command {
        Command::Verify { target } => {
            let report = run_verification(target, &Options { seed: cli.seed, samples: cli.samples });
            match cli.format {
                OutputFormat::Text => print!("{}", report.to_text()),
                OutputFormat::Json => print!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code())
        }
        Command::Eval { expr } => match evaluate(&expr) {
            Ok((value, text)) => {
                match cli.format {
                    OutputFormat::Text => println!("{text}"),
                    OutputFormat::Json => {
                        println!("{}", serde_json::json!({ "expr": expr, "type": value.type_name(), "value": text }))
                    }
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::DumpSc { algebra, basis, sc_format, out } => {
            let text = match dump_sc(algebra, basis, sc_format) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Command::Dims => {
            let mut failed = false;
            for name in Name::ALL {
                match build_named(name) {
                    Ok(b) => println!("{name} {}", b.dim()),
                    Err(e) => {
                        failed = true;
                        println!("{name} error: {e}");
                    }
                }
            }
            ExitCode::from(u8::from(failed))
        }
    }
}
