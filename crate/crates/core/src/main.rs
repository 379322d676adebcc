use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ghzcert::cli::{self, CommandOutput, StateKind};
use ghzcert::NoiseKind;

#[derive(Parser)]
#[command(
    name = "ghzcert",
    version,
    about = "GHZ nonlocality certification for three-qubit states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a state file.
    Certify {
        #[arg(long)]
        state: PathBuf,
        /// Emit key=value lines.
        #[arg(long)]
        machine: bool,
    },
    /// Sweep the purity of a noisy GHZ family and locate the thresholds.
    ScanNoise {
        #[arg(long, value_enum)]
        kind: NoiseArg,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        machine: bool,
    },
    /// Scan the tilt angles of observer 1.
    ScanAngles {
        #[arg(long, default_value_t = ghzcert::tilted::DEFAULT_GRID)]
        grid: usize,
        #[arg(long)]
        machine: bool,
    },
    /// Trace distance between two state files.
    TraceDistance {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Write a GHZ, white-noise or colored-noise state file.
    MakeState {
        #[arg(long, value_enum)]
        kind: StateArg,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum NoiseArg {
    White,
    Colored,
}

#[derive(Clone, Copy, ValueEnum)]
enum StateArg {
    Ghz,
    White,
    Colored,
}

fn run(command: Command) -> Result<CommandOutput, cli::CliError> {
    match command {
        Command::Certify { state, machine } => cli::cmd_certify(&state, machine),
        Command::ScanNoise { kind, steps, machine } => {
            let kind = match kind {
                NoiseArg::White => NoiseKind::White,
                NoiseArg::Colored => NoiseKind::Colored,
            };
            cli::cmd_scan_noise(kind, steps, machine)
        }
        Command::ScanAngles { grid, machine } => cli::cmd_scan_angles(grid, machine),
        Command::TraceDistance { a, b } => cli::cmd_trace_distance(&a, &b),
        Command::MakeState { kind, p, out } => {
            let kind = match kind {
                StateArg::Ghz => StateKind::Ghz,
                StateArg::White => StateKind::White,
                StateArg::Colored => StateKind::Colored,
            };
            cli::cmd_make_state(kind, p, &out)
        }
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { cli::EXIT_ERROR } else { cli::EXIT_OK });
        }
    };
    match run(args.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
