use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skewgoppa_cli::commands::{EXIT_OK, EXIT_PARSE, EXIT_VERIFY};
use skewgoppa_cli::{cmd_build, cmd_distance, cmd_params, cmd_verify, parse_config, CliError, InstanceConfig};

#[derive(Parser)]
#[command(name = "skewgoppa", version, about = "Build and check skew and multivariate Goppa codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the code and print (or write) its matrices
    Build {
        config: PathBuf,
        /// Directory for one text file per matrix
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print n, k, d and the bound checks
    Params {
        config: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a property suite
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive minimum distance
    Distance {
        config: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn load(path: &PathBuf) -> Result<InstanceConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    Ok(parse_config(&text)?)
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Build { config, out } => Ok((cmd_build(&load(&config)?, out.as_deref())?, true)),
        Command::Params { config, budget } => cmd_params(&load(&config)?, budget),
        Command::Verify { suite, seed } => cmd_verify(&suite, seed),
        Command::Distance { config, budget } => cmd_distance(&load(&config)?, budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE as u8 } else { EXIT_OK as u8 });
        }
    };
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            ExitCode::from(if ok { EXIT_OK } else { EXIT_VERIFY } as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
