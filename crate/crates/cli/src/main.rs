use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bellsim_cli::config::{EngineName, FamilyName, PointSpec, RunConfig};
use bellsim_cli::figures::run_figure;
use bellsim_cli::threshold::run_threshold;
use bellsim_cli::validate::{run_validate, Fault};
use bellsim_cli::{exit, CliError};
use bellsim_core::bell::DEFAULT_THRESHOLD_TOL;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

/// CHSH violation of lossy polarization, entangled coherent and entangled thermal states.
#[derive(Parser)]
#[command(name = "bellsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the data behind one figure as CSV.
    Figure {
        /// fig2a, fig2b, fig3, fig4a, fig4b, fig5a or fig5b
        name: String,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Add a wall_time_s column (breaks byte-for-byte reproducibility).
        #[arg(long)]
        wall_time: bool,
    },
    /// Detector efficiency eta2 below which the CHSH violation disappears.
    Threshold {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long = "V", visible_alias = "v")]
        v: Option<f64>,
        #[arg(long)]
        d: Option<f64>,
        /// Transmission before the local rotations.
        #[arg(long, default_value_t = 1.0)]
        eta1: f64,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD_TOL)]
        tol: f64,
        #[arg(long, value_enum)]
        engine: Option<EngineName>,
        /// Write the JSON record here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a grid described by a TOML config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Overrides `output.path` from the config.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides `options.jobs` from the config.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Cross-check closed forms against the oracles.
    Validate {
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io {
            context: format!("writing {}", path.display()),
            source: e,
        }),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io {
            context: "writing to stdout".into(),
            source: e,
        }),
    }
}

fn run(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Figure {
            name,
            out,
            jobs,
            wall_time,
        } => {
            let fig = name.parse()?;
            emit(&run_figure(fig, jobs, wall_time)?, out.as_deref())?;
        }
        Command::Threshold {
            family,
            n,
            alpha,
            v,
            d,
            eta1,
            tol,
            engine,
            out,
        } => {
            let spec = PointSpec {
                n,
                alpha,
                v,
                d,
                eta1: Some(eta1),
                engine,
                ..PointSpec::new(family)
            };
            let record = run_threshold(&spec, tol)?;
            let mut json = serde_json::to_string_pretty(&record).expect("record serializes");
            json.push('\n');
            emit(&json, out.as_deref())?;
        }
        Command::Sweep { config, out, jobs } => {
            let cfg = RunConfig::load(&config)?;
            let csv = bellsim_cli::sweep::run_sweep(&cfg, jobs)?;
            emit(&csv, out.as_deref().or(cfg.output.path.as_deref()))?;
        }
        Command::Validate { inject_fault } => {
            let report = run_validate(inject_fault);
            print!("{report}");
            return Ok(report.exit_code());
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                ErrorKind::InvalidSubcommand => exit::UNKNOWN_COMMAND,
                _ => exit::CONFIG,
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bellsim: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
