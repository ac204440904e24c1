//! Run configuration: a TOML file, overridden by command-line flags.
//!
//! ```toml
//! [problem]
//! id = "vortex"          # mixed-packet, vortex, gaussian-pulse, low-mach-shear, kelvin-helmholtz
//! beta = 5.0             # any other key overrides a problem parameter
//!
//! [run]
//! scheme = "rb-tai"      # rb, rb-tai, semi
//! mesh = 64              # or meshes = [32, 64, 128]
//! cfl = 0.45             # or cfls = [0.1, 0.2, ...]
//! t_final = 10.0
//! sample_interval = 1.0
//! override_cfl_guard = false
//! conservation_limit = 1e-10
//! parallel_runs = false
//! seed = 0
//!
//! [output]
//! dir = "out"
//! nodal_csv = false
//!
//! [symbols]
//! nus = [0.25, 0.5]
//! khs = [0.25, 0.5, 0.75, 1.0]
//! angles = 72
//! branch = 1
//! mach = 0.4
//! flow_angle_deg = 25.0
//! ```

use std::path::{Path, PathBuf};

use activeflux::euler::{GasModel, PrimitiveState};
use activeflux::problems::{ProblemId, ProblemSpec};
use activeflux::studies::RunOptions;
use activeflux::vonneumann::SweepSpec;
use activeflux::Scheme;
use anyhow::{bail, ensure, Context, Result};
use serde::Deserialize;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub problem: toml::Table,
    #[serde(default)]
    pub run: RunSection,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default)]
    pub symbols: SymbolSection,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub scheme: Option<String>,
    pub mesh: Option<usize>,
    pub meshes: Option<Vec<usize>>,
    pub cfl: Option<f64>,
    pub cfls: Option<Vec<f64>>,
    pub t_final: Option<f64>,
    pub sample_interval: Option<f64>,
    pub override_cfl_guard: Option<bool>,
    pub conservation_limit: Option<f64>,
    pub parallel_runs: Option<bool>,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub dir: Option<PathBuf>,
    pub nodal_csv: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolSection {
    pub nus: Option<Vec<f64>>,
    pub khs: Option<Vec<f64>>,
    pub angles: Option<usize>,
    pub branch: Option<i32>,
    pub mach: Option<f64>,
    pub flow_angle_deg: Option<f64>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

/// Values given on the command line; each one beats the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub problem: Option<String>,
    pub meshes: Vec<usize>,
    pub scheme: Option<String>,
    pub cfls: Vec<f64>,
    pub t_final: Option<f64>,
    pub out: Option<PathBuf>,
    pub override_cfl_guard: bool,
    pub parallel_runs: bool,
    /// `key=value` problem parameters.
    pub set: Vec<String>,
}

/// Which subcommand a configuration is resolved for; sets the defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Run,
    Converge,
    CflSweep,
    Symbols,
    Verify,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub spec: ProblemSpec,
    pub meshes: Vec<usize>,
    pub scheme: Scheme,
    pub cfls: Vec<f64>,
    pub sample_interval: Option<f64>,
    pub override_cfl_guard: bool,
    pub conservation_limit: f64,
    pub parallel_runs: bool,
    pub seed: u64,
    pub out: PathBuf,
    pub nodal_csv: bool,
    pub symbols: SweepSpec,
}

impl RunConfig {
    pub fn resolve(file: &ConfigFile, cli: &Overrides, task: Task) -> Result<Self> {
        let mut problem = file.problem.clone();
        let id_text = match (&cli.problem, problem.remove("id")) {
            (Some(id), _) => id.clone(),
            (None, Some(toml::Value::String(id))) => id,
            (None, Some(other)) => bail!("problem id must be a string, found {other}"),
            (None, None) => "vortex".to_string(),
        };
        let id: ProblemId = id_text.parse()?;
        let mut spec = ProblemSpec::new(id);
        for (key, value) in &problem {
            let v = match value {
                toml::Value::Float(x) => *x,
                toml::Value::Integer(n) => *n as f64,
                other => bail!("problem parameter {key} must be a number, found {other}"),
            };
            spec.set(key, v)?;
        }
        for item in &cli.set {
            let (key, value) = item.split_once('=').with_context(|| format!("expected key=value, got '{item}'"))?;
            let v: f64 = value.trim().parse().with_context(|| format!("parameter {key}: '{value}' is not a number"))?;
            spec.set(key.trim(), v)?;
        }
        if let Some(t) = cli.t_final.or(file.run.t_final) {
            spec.set("t_final", t)?;
        }

        let run = &file.run;
        let scheme: Scheme = cli.scheme.as_deref().or(run.scheme.as_deref()).unwrap_or("rb-tai").parse()?;
        let meshes = if !cli.meshes.is_empty() {
            cli.meshes.clone()
        } else if let Some(m) = &run.meshes {
            m.clone()
        } else if let Some(m) = run.mesh {
            vec![m]
        } else {
            default_meshes(id, task)
        };
        let cfls = if !cli.cfls.is_empty() {
            cli.cfls.clone()
        } else if let Some(c) = &run.cfls {
            c.clone()
        } else if let Some(c) = run.cfl {
            vec![c]
        } else if task == Task::CflSweep {
            (1..=10).map(|k| k as f64 / 10.0).collect()
        } else {
            vec![default_cfl(scheme)]
        };

        let sym = &file.symbols;
        let mut symbols = SweepSpec::default();
        if let Some(nus) = &sym.nus {
            symbols.nus = nus.clone();
        }
        if let Some(khs) = &sym.khs {
            symbols.khs = khs.clone();
        }
        if let Some(n) = sym.angles {
            symbols.angles = n;
        }
        if let Some(b) = sym.branch {
            symbols.branch = b;
        }
        if sym.mach.is_some() || sym.flow_angle_deg.is_some() {
            let mach = sym.mach.unwrap_or(0.4);
            let theta = sym.flow_angle_deg.unwrap_or(25.0).to_radians();
            symbols.background = PrimitiveState::new(1.0, mach * theta.cos(), mach * theta.sin(), 1.0);
        }
        symbols.gas = GasModel::new(spec.gamma)?;

        let cfg = Self {
            spec,
            meshes,
            scheme,
            cfls,
            sample_interval: run.sample_interval,
            override_cfl_guard: cli.override_cfl_guard || run.override_cfl_guard.unwrap_or(false),
            conservation_limit: run.conservation_limit.unwrap_or(1e-10),
            parallel_runs: cli.parallel_runs || run.parallel_runs.unwrap_or(false),
            seed: run.seed.unwrap_or(0),
            out: cli.out.clone().or_else(|| file.output.dir.clone()).unwrap_or_else(|| PathBuf::from("out")),
            nodal_csv: file.output.nodal_csv.unwrap_or(false),
            symbols,
        };
        cfg.validate(task)?;
        Ok(cfg)
    }

    pub fn validate(&self, task: Task) -> Result<()> {
        self.spec.validate()?;
        ensure!(!self.meshes.is_empty(), "no mesh sizes given");
        ensure!(self.meshes.iter().all(|&n| n >= 2), "mesh sizes must be at least 2");
        ensure!(!self.cfls.is_empty(), "no CFL numbers given");
        ensure!(self.conservation_limit > 0.0, "conservation limit must be positive");
        match task {
            Task::Run => {
                ensure!(self.meshes.len() == 1, "run takes one mesh size, got {:?}", self.meshes);
                ensure!(self.cfls.len() == 1, "run takes one CFL number, got {:?}", self.cfls);
                self.options(self.cfls[0])
                    .validate()
                    .context("refusing to run; pass --override-cfl-guard or set run.override_cfl_guard to proceed")?;
            }
            Task::Converge => {
                ensure!(self.cfls.len() == 1, "converge takes one CFL number, got {:?}", self.cfls);
                if self.spec.id != ProblemId::MixedPacket {
                    self.options(self.cfls[0]).validate()?;
                }
            }
            Task::CflSweep => {
                ensure!(self.meshes.len() == 1, "cfl-sweep takes one mesh size, got {:?}", self.meshes);
                ensure!(self.cfls.iter().all(|&c| c > 0.0 && c.is_finite()), "CFL numbers must be positive");
            }
            Task::Symbols => {
                let s = &self.symbols;
                ensure!(s.nus.iter().all(|&nu| (0.0..=0.5).contains(&nu)), "symbol nus must lie in [0, 0.5]");
                ensure!(s.khs.iter().all(|&k| k >= 0.0 && k.is_finite()), "symbol Kh values must be non-negative");
                ensure!(s.angles > 0, "need at least one angle");
                ensure!(s.branch == 1 || s.branch == -1, "branch must be 1 or -1");
            }
            Task::Verify => {}
        }
        Ok(())
    }

    pub fn options(&self, cfl: f64) -> RunOptions {
        let mut opts = RunOptions::new(self.scheme, cfl, self.spec.t_final);
        if self.override_cfl_guard {
            opts = opts.override_guard();
        }
        opts.conservation_limit = self.conservation_limit;
        opts.sample_interval = self.sample_interval;
        opts
    }
}

fn default_meshes(id: ProblemId, task: Task) -> Vec<usize> {
    match (task, id) {
        (Task::Converge, ProblemId::MixedPacket) => vec![8, 16, 32, 64, 128],
        (Task::Converge, ProblemId::GaussianPulse) => vec![50, 100, 200],
        (Task::Converge, _) => vec![32, 64, 128],
        (_, ProblemId::LowMachShear) => vec![64],
        _ => vec![32],
    }
}

fn default_cfl(scheme: Scheme) -> f64 {
    match scheme {
        Scheme::SemiDiscrete => 0.3,
        _ => 0.45,
    }
}
