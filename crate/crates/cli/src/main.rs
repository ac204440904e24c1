use std::path::PathBuf;
use std::process::ExitCode;

use activeflux_cli::commands::{self, Outcome};
use activeflux_cli::config::{ConfigFile, Overrides, RunConfig, Task};
use activeflux_cli::THREADS_ENV;
use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

/// Active Flux solvers for the 2D Euler equations.
#[derive(Parser, Debug)]
#[command(name = "activeflux", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one problem on one mesh and write dumps, diagnostics and a step log.
    Run(Common),
    /// Refinement study over several meshes.
    Converge(Common),
    /// Error and stability over a list of CFL numbers.
    CflSweep(Common),
    /// Von Neumann gains of the point updates over wave angles.
    Symbols(Common),
    /// Quick oracle and property checks of the solvers.
    Verify(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// TOML configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem: mixed-packet, vortex, gaussian-pulse, low-mach-shear, kelvin-helmholtz.
    #[arg(long)]
    problem: Option<String>,
    /// Cells in x; a comma list for refinement studies.
    #[arg(long, value_delimiter = ',')]
    mesh: Vec<usize>,
    /// rb, rb-tai or semi.
    #[arg(long)]
    scheme: Option<String>,
    /// Target CFL; a comma list for sweeps.
    #[arg(long, value_delimiter = ',')]
    cfl: Vec<f64>,
    #[arg(long)]
    tfinal: Option<f64>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow CFL numbers above the acoustic stencil limit of 0.5.
    #[arg(long)]
    override_cfl_guard: bool,
    /// Run the meshes or CFL numbers of a study concurrently.
    #[arg(long)]
    parallel_runs: bool,
    /// Problem parameter, `key=value`; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

impl Common {
    fn resolve(&self, task: Task) -> Result<RunConfig> {
        let file = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let cli = Overrides {
            problem: self.problem.clone(),
            meshes: self.mesh.clone(),
            scheme: self.scheme.clone(),
            cfls: self.cfl.clone(),
            t_final: self.tfinal,
            out: self.out.clone(),
            override_cfl_guard: self.override_cfl_guard,
            parallel_runs: self.parallel_runs,
            set: self.set.clone(),
        };
        RunConfig::resolve(&file, &cli, task)
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let n: usize = value.trim().parse().with_context(|| format!("{THREADS_ENV}='{value}' is not a thread count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<Outcome> {
    configure_threads()?;
    let (outcome, text) = match cli.command {
        Command::Run(c) => {
            let cfg = c.resolve(Task::Run)?;
            let (outcome, result) = commands::run(&cfg)?;
            let mut text = format!("steps = {}\ntime = {}\n", result.steps, result.time);
            if let Some(e) = result.error {
                text.push_str(&format!("error = {e:.10e}\n"));
            }
            (outcome, text)
        }
        Command::Converge(c) => commands::converge(&c.resolve(Task::Converge)?)?,
        Command::CflSweep(c) => commands::cfl_sweep(&c.resolve(Task::CflSweep)?)?,
        Command::Symbols(c) => commands::symbols(&c.resolve(Task::Symbols)?)?,
        Command::Verify(c) => commands::verify(&c.resolve(Task::Verify)?)?,
    };
    print!("{text}");
    Ok(outcome)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    match execute(Cli::parse()) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Diverged(why)) => {
            eprintln!("run diverged: {why}");
            ExitCode::from(3)
        }
        Ok(Outcome::Failed(n)) => {
            eprintln!("{n} checks failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
