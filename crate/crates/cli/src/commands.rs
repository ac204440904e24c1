//! The experiment runners behind each subcommand.

use std::fmt::Write as _;

use activeflux::problems::ProblemId;
use activeflux::studies::{
    cfl_sweep_csv, convergence_csv, convergence_study, is_u_shaped, mixed_packet_table, pulse_csv, pulse_study,
    run_to_time_observed, solution_error, with_rates, CflPoint, ConvergenceRow, RunStatus,
};
use activeflux::vonneumann::{sweep, sweep_csv, SymbolScheme};
use anyhow::{bail, Result};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::dump::{nodal_csv, FieldDump};
use crate::manifest::Artifacts;
use crate::verify;

/// How a subcommand ended.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Success,
    /// The run stopped early; its artifacts were still written.
    Diverged(String),
    /// Some verification checks failed.
    Failed(usize),
}

/// Result of a single run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub status: RunStatus,
    pub steps: usize,
    pub time: f64,
    pub error: Option<f64>,
}

pub fn run(cfg: &RunConfig) -> Result<(Outcome, RunResult)> {
    let spec = &cfg.spec;
    let n = cfg.meshes[0];
    let cfl = cfg.cfls[0];
    let opts = cfg.options(cfl);
    if cfg.override_cfl_guard && cfl > activeflux::acoustic::NU_LIMIT {
        log::warn!("CFL {cfl} above {} with the guard overridden", activeflux::acoustic::NU_LIMIT);
    }
    let mut art = Artifacts::create(&cfg.out)?;
    let field = spec.initial_field(spec.mesh(n)?)?;
    let dump = |field, time| FieldDump {
        problem: spec.id.name().to_string(),
        scheme: cfg.scheme.name().to_string(),
        time,
        gamma: spec.gamma,
        field,
    };
    art.write("initial.afd", &dump(field.clone(), 0.0).to_bytes())?;

    let mut steps_csv = String::from("step,time,dt,max_nu,max_cfl,res_rho,res_mx,res_my,res_e\n");
    let mut timing_csv = String::from("step,reconstruction_s,points_s,fluxes_s,averages_s\n");
    let out = run_to_time_observed(spec, field, &opts, |step, t, report| {
        let [a, b, c, d] = report.conservation;
        let _ = writeln!(
            steps_csv,
            "{step},{t:.16e},{:.16e},{:.16e},{:.16e},{a:.6e},{b:.6e},{c:.6e},{d:.6e}",
            report.dt, report.max_nu, report.max_cfl
        );
        let tm = &report.timings;
        let _ = writeln!(
            timing_csv,
            "{step},{:.6e},{:.6e},{:.6e},{:.6e}",
            tm.reconstruction.as_secs_f64(),
            tm.points.as_secs_f64(),
            tm.fluxes.as_secs_f64(),
            tm.averages.as_secs_f64()
        );
    })?;
    let s = &out.summary;
    let error = match s.status {
        RunStatus::Completed => solution_error(spec, &out.field, s.time)?,
        RunStatus::Diverged { .. } => None,
    };
    art.write("final.afd", &dump(out.field.clone(), s.time).to_bytes())?;
    if cfg.nodal_csv {
        art.write("final_nodes.csv", nodal_csv(&out.field).as_bytes())?;
    }
    art.write("diagnostics.csv", out.series.to_csv().as_bytes())?;
    art.write("steps.csv", steps_csv.as_bytes())?;
    art.write("timings.csv", timing_csv.as_bytes())?;

    let mut summary = String::new();
    let _ = writeln!(summary, "problem = \"{}\"", spec.id.name());
    let _ = writeln!(summary, "scheme = \"{}\"", cfg.scheme.name());
    let _ = writeln!(summary, "mesh = [{}, {}]", out.field.mesh.nx, out.field.mesh.ny);
    let _ = writeln!(summary, "cfl = {cfl}");
    let _ = writeln!(summary, "t_final = {}", spec.t_final);
    let (status, reason) = match &s.status {
        RunStatus::Completed => ("completed", None),
        RunStatus::Diverged { reason, .. } => ("diverged", Some(reason.clone())),
    };
    let _ = writeln!(summary, "status = \"{status}\"");
    if let Some(reason) = &reason {
        let _ = writeln!(summary, "reason = {:?}", reason);
    }
    let _ = writeln!(summary, "steps = {}", s.steps);
    let _ = writeln!(summary, "time = {:.16e}", s.time);
    if let Some(e) = error {
        let _ = writeln!(summary, "error = {e:.16e}");
    }
    let _ = writeln!(summary, "max_conservation = {:.6e}", s.max_conservation);
    let _ = writeln!(summary, "max_nu = {:.16e}", s.max_nu);
    let _ = writeln!(summary, "max_cfl = {:.16e}", s.max_cfl);
    art.write("summary.toml", summary.as_bytes())?;
    art.finish()?;
    log::info!("{} steps in {:.2} s ({:.2} s in phases)", s.steps, s.wall.as_secs_f64(), s.timings.total().as_secs_f64());

    let result = RunResult { status: s.status.clone(), steps: s.steps, time: s.time, error };
    let outcome = match &s.status {
        RunStatus::Completed => Outcome::Success,
        RunStatus::Diverged { step, time, reason } => Outcome::Diverged(format!("step {step}, t = {time}: {reason}")),
    };
    Ok((outcome, result))
}

/// Refinement table; the wave packet gets the one-step table, the pulse its
/// asymmetry table.
pub fn converge(cfg: &RunConfig) -> Result<(Outcome, String)> {
    let spec = &cfg.spec;
    let mut art = Artifacts::create(&cfg.out)?;
    let csv = match spec.id {
        ProblemId::MixedPacket => {
            let rows = map_meshes(cfg, |n| mixed_packet_table(spec, cfg.scheme, &[n]))?;
            convergence_csv(cfg.scheme.name(), &rows)
        }
        ProblemId::GaussianPulse => pulse_csv(&pulse_study(spec, &cfg.meshes, &cfg.options(cfg.cfls[0]))?),
        ProblemId::Vortex => {
            let opts = cfg.options(cfg.cfls[0]);
            let rows = map_meshes(cfg, |n| convergence_study(spec, &[n], &opts))?;
            convergence_csv(cfg.scheme.name(), &rows)
        }
        other => bail!("{other} has no reference solution for a refinement study"),
    };
    art.write("convergence.csv", csv.as_bytes())?;
    art.finish()?;
    Ok((Outcome::Success, csv))
}

fn map_meshes<F>(cfg: &RunConfig, f: F) -> Result<Vec<ConvergenceRow>>
where
    F: Fn(usize) -> activeflux::Result<Vec<ConvergenceRow>> + Sync,
{
    let per_mesh: Vec<_> = if cfg.parallel_runs {
        cfg.meshes.par_iter().map(|&n| f(n)).collect()
    } else {
        cfg.meshes.iter().map(|&n| f(n)).collect()
    };
    let mut rows = Vec::with_capacity(cfg.meshes.len());
    for r in per_mesh {
        rows.extend(r?);
    }
    with_rates(&mut rows);
    Ok(rows)
}

pub fn cfl_sweep(cfg: &RunConfig) -> Result<(Outcome, String)> {
    let spec = &cfg.spec;
    let n = cfg.meshes[0];
    let mut art = Artifacts::create(&cfg.out)?;
    let one = |cfl: f64| activeflux::studies::cfl_sweep(spec, n, cfg.scheme, &[cfl]);
    let per_cfl: Vec<_> = if cfg.parallel_runs {
        cfg.cfls.par_iter().map(|&c| one(c)).collect()
    } else {
        cfg.cfls.iter().map(|&c| one(c)).collect()
    };
    let mut points: Vec<CflPoint> = Vec::with_capacity(cfg.cfls.len());
    for p in per_cfl {
        points.extend(p?);
    }
    let csv = cfl_sweep_csv(cfg.scheme.name(), n, &points);
    art.write("cfl_sweep.csv", csv.as_bytes())?;
    let summary = format!("u_shaped = {}\n", is_u_shaped(&points));
    art.write("cfl_summary.toml", summary.as_bytes())?;
    art.finish()?;
    Ok((Outcome::Success, csv + &summary))
}

pub fn symbols(cfg: &RunConfig) -> Result<(Outcome, String)> {
    let rows = sweep(&cfg.symbols)?;
    let mut art = Artifacts::create(&cfg.out)?;
    art.write("symbols.csv", sweep_csv(&rows).as_bytes())?;
    let mut table = String::from("scheme,nu,kh,max_error,mean_error\n");
    for &nu in &cfg.symbols.nus {
        for &kh in &cfg.symbols.khs {
            for scheme in SymbolScheme::ALL {
                let errs: Vec<f64> =
                    rows.iter().filter(|r| r.scheme == scheme && r.nu == nu && r.kh == kh).map(|r| r.error).collect();
                let max = errs.iter().copied().fold(0.0, f64::max);
                let mean = errs.iter().sum::<f64>() / errs.len() as f64;
                let _ = writeln!(table, "{},{nu},{kh},{max:.10e},{mean:.10e}", scheme.name());
            }
        }
    }
    art.write("symbol_errors.csv", table.as_bytes())?;
    art.finish()?;
    Ok((Outcome::Success, table))
}

pub fn verify(cfg: &RunConfig) -> Result<(Outcome, String)> {
    let checks = verify::run_all(cfg.seed)?;
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let mut art = Artifacts::create(&cfg.out)?;
    art.write("verify.txt", text.as_bytes())?;
    art.finish()?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let outcome = if failed == 0 { Outcome::Success } else { Outcome::Failed(failed) };
    Ok((outcome, text))
}
