//! Command-line entry point; see `weno3 --help`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand as ClapSubcommand};

use weno3z::config::validate_config;
use weno3z::runner::{run, RunManifest, Subcommand};

#[derive(Parser)]
#[command(name = "weno3", version, about = "Third-order WENO-Z studies: solve, converge, probe, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ClapSubcommand)]
enum Command {
    /// Advance one case to its end time and dump the field
    Solve(Common),
    /// Grid-refinement study on an advection case
    Converge(Common),
    /// Order of a β, τ or δ product near a placed critical point
    Acp(Common),
    /// Randomized check of the weight-ratio propositions
    Props(Common),
    /// Nullspace of the quadratic-form order constraints
    Nullspace(Common),
    /// Variable and length scale-independence on Shu–Osher
    Scale(Common),
    /// Relative cost on the 2-D Riemann problem (WENO3-JS = 100)
    Bench(Common),
    /// Print the normalized form of a config and exit
    Check {
        config: PathBuf,
        #[arg(long)]
        full_scale: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Config file; defaults apply to everything it leaves out
    #[arg(short, long)]
    config: Option<PathBuf>,
    /// Output directory
    #[arg(short, long, default_value = "out")]
    out: PathBuf,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads (0 = all cores)
    #[arg(short = 'j', long, default_value_t = 0)]
    threads: usize,
    /// Use the full-resolution 2-D grids instead of the desk-scale ones
    #[arg(long)]
    full_scale: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (sub, common) = match cli.command {
        Command::Solve(c) => (Subcommand::Solve, c),
        Command::Converge(c) => (Subcommand::Converge, c),
        Command::Acp(c) => (Subcommand::Acp, c),
        Command::Props(c) => (Subcommand::Props, c),
        Command::Nullspace(c) => (Subcommand::Nullspace, c),
        Command::Scale(c) => (Subcommand::Scale, c),
        Command::Bench(c) => (Subcommand::Bench, c),
        Command::Check { config, full_scale } => {
            let text = match std::fs::read_to_string(&config) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {}: {e}", config.display());
                    return ExitCode::from(2);
                }
            };
            return match validate_config(&text, full_scale) {
                Ok(cfg) => {
                    print!("{}", cfg.to_text());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {}: {e}", config.display());
                    ExitCode::from(2)
                }
            };
        }
    };
    let manifest = RunManifest {
        subcommand: sub,
        config: common.config,
        out_dir: common.out,
        seed: common.seed,
        threads: common.threads,
        full_scale: common.full_scale,
    };
    match run(&manifest) {
        Ok(summary) => {
            for v in &summary.verdicts {
                println!("{v}");
            }
            for f in &summary.failures {
                eprintln!("robustness: {f}");
            }
            println!("artifacts in {}", manifest.out_dir.display());
            ExitCode::from(summary.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
