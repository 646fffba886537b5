use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gmcone_cli::config::{Overrides, RunConfig};
use gmcone_cli::parse::{parse_foliation, parse_ideal, parse_tau};
use gmcone_cli::suites::{run_suite, SUITES};
use gmcone_cli::{converge, pair, plot};

#[derive(Parser)]
#[command(
    name = "gmcone",
    version,
    about = "Gardiner-Masur cone of the torus: checks, tables and figures"
)]
struct Cli {
    #[command(flatten)]
    shared: SharedArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SharedArgs {
    /// TOML file with any of the settings below; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Basepoint as "x,y" or "i".
    #[arg(long, global = true)]
    basepoint: Option<String>,
    /// Largest curve-family index used for truncated sups.
    #[arg(long, global = true)]
    truncation: Option<u32>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Grid size for sampled sups.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Pairwise pairing table for a JSON list of points.
    Pair {
        #[arg(long)]
        input: PathBuf,
    },
    /// Convergence tables.
    Converge {
        #[arg(long, value_enum)]
        mode: ConvergeMode,
        /// First interior point (dinf).
        #[arg(long, default_value = "0,1")]
        from: String,
        /// Second interior point (dinf).
        #[arg(long, default_value = "0,2")]
        to: String,
        /// Fixed interior point paired along the ray (radial).
        #[arg(long, default_value = "0,2")]
        probe: String,
        /// Ideal endpoint of the ray (radial): "inf" or a real number.
        #[arg(long, default_value = "inf")]
        target: String,
        /// Vertical foliation of the first ray (gromov-boundary).
        #[arg(long, default_value = "1,0")]
        f: String,
        /// Vertical foliation of the second ray (gromov-boundary).
        #[arg(long, default_value = "0,1")]
        g: String,
        #[arg(long, default_value_t = 20)]
        t_max: u32,
    },
    /// SVG figures.
    Plot {
        #[arg(long, value_enum)]
        what: PlotKind,
        #[arg(long, default_value = "0,1")]
        from: String,
        #[arg(long, default_value = "0,2")]
        to: String,
        #[arg(long, default_value_t = 3)]
        frames: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvergeMode {
    Dinf,
    Radial,
    GromovBoundary,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    Geodesic,
    Embedding,
    Walsh,
}

impl SharedArgs {
    fn resolve(&self) -> Result<RunConfig> {
        let flags = Overrides {
            basepoint: self.basepoint.clone(),
            truncation: self.truncation,
            tol: self.tol,
            samples: self.samples,
            trials: self.trials,
            seed: self.seed,
            out: self.out.clone(),
        };
        RunConfig::resolve(self.config.as_deref(), &flags)
    }
}

fn emit(config: &RunConfig, text: &str) -> Result<()> {
    match &config.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

/// Returns whether the command succeeded in the sense of its exit status.
fn run(cli: Cli) -> Result<bool> {
    let config = cli.shared.resolve()?;
    match cli.command {
        Command::Verify { suite } => {
            let report = run_suite(&suite, &config).ok_or_else(|| {
                anyhow!(
                    "unknown suite {suite:?}; expected one of {}",
                    SUITES.join(", ")
                )
            })?;
            emit(&config, &report.to_json())?;
            Ok(report.pass)
        }
        Command::Pair { input } => {
            let json = std::fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let points = pair::read_points(&json, &config.basepoint)?;
            emit(&config, &pair::pair_table(&config, &points)?)?;
            Ok(true)
        }
        Command::Converge {
            mode,
            from,
            to,
            probe,
            target,
            f,
            g,
            t_max,
        } => {
            let table = match mode {
                ConvergeMode::Dinf => {
                    converge::dinf(&config, &parse_tau(&from)?, &parse_tau(&to)?)?
                }
                ConvergeMode::Radial => {
                    converge::radial(&config, &parse_tau(&probe)?, &parse_ideal(&target)?, t_max)?
                }
                ConvergeMode::GromovBoundary => {
                    let (f, g) = (parse_foliation(&f)?, parse_foliation(&g)?);
                    if f.is_zero() || g.is_zero() {
                        bail!("ray directions must be nonzero foliations");
                    }
                    converge::gromov_boundary(&config, &f, &g, t_max)?
                }
            };
            emit(&config, &table)?;
            Ok(true)
        }
        Command::Plot {
            what,
            from,
            to,
            frames,
        } => {
            let svg = match what {
                PlotKind::Geodesic => plot::geodesic(&parse_tau(&from)?, &parse_tau(&to)?)?,
                PlotKind::Embedding => plot::embedding(&config)?,
                PlotKind::Walsh => plot::walsh(frames)?,
            };
            emit(&config, &svg)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
