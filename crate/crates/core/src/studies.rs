//! Time integration of the benchmark problems and the refinement, CFL and
//! symmetry studies built on it.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::acoustic::{CflGuard, NU_LIMIT};
use crate::average::{advance_step, cfl_time_step, PhaseTimings, StepOptions, StepReport};
use crate::error::{Error, Result};
use crate::euler::GasModel;
use crate::grid::{DofField, NodeFamily, Reconstruction};
use crate::point_update::Scheme;
use crate::problems::{
    diagnostics, l1_density_error, max_pressure_difference, max_point_error, pulse_asymmetry, DiagnosticSample,
    DiagnosticSeries, ProblemId, ProblemSpec,
};

/// Density and pressure bounds outside which a run counts as diverged.
pub const BLOWUP_BOUNDS: (f64, f64) = (1e-10, 1e10);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunOptions {
    pub scheme: Scheme,
    /// Target `dt (|u| + c)_max / h`, re-evaluated every step.
    pub cfl: f64,
    pub t_final: f64,
    pub guard: CflGuard,
    pub conservation_limit: f64,
    /// Spacing of diagnostic samples; `None` records only the end points.
    pub sample_interval: Option<f64>,
    pub max_steps: usize,
}

impl RunOptions {
    pub fn new(scheme: Scheme, cfl: f64, t_final: f64) -> Self {
        Self {
            scheme,
            cfl,
            t_final,
            guard: CflGuard::Enforce,
            conservation_limit: StepOptions::default().conservation_limit,
            sample_interval: None,
            max_steps: 10_000_000,
        }
    }

    /// Allows CFL numbers above the acoustic stencil limit.
    pub fn override_guard(mut self) -> Self {
        self.guard = CflGuard::Override;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cfl > 0.0) || !self.cfl.is_finite() {
            return Err(Error::InvalidParameter(format!("CFL number {} must be positive", self.cfl)));
        }
        if self.scheme != Scheme::SemiDiscrete && self.guard == CflGuard::Enforce && self.cfl > NU_LIMIT {
            return Err(Error::InvalidParameter(format!(
                "CFL number {} exceeds {NU_LIMIT}: the acoustic stencils only reach adjacent cells up to that limit; \
                 pass the CFL guard override to run anyway",
                self.cfl
            )));
        }
        if !(self.t_final >= 0.0) || !self.t_final.is_finite() {
            return Err(Error::InvalidParameter(format!("final time {} must be finite and non-negative", self.t_final)));
        }
        if let Some(dt) = self.sample_interval {
            if !(dt > 0.0) {
                return Err(Error::InvalidParameter(format!("sample interval {dt} must be positive")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RunStatus {
    Completed,
    Diverged { step: usize, time: f64, reason: String },
}

impl RunStatus {
    pub fn completed(&self) -> bool {
        matches!(self, RunStatus::Completed)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunSummary {
    pub status: RunStatus,
    pub time: f64,
    pub steps: usize,
    pub max_conservation: f64,
    pub max_nu: f64,
    pub max_cfl: f64,
    pub timings: PhaseTimings,
    pub wall: Duration,
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    /// Last field that passed the step checks.
    pub field: DofField<f64>,
    pub summary: RunSummary,
    pub series: DiagnosticSeries,
}

/// Reason a field counts as diverged, if it does.
pub fn blowup(field: &DofField<f64>) -> Option<String> {
    let (lo, hi) = BLOWUP_BOUNDS;
    let bad = |rho: f64, p: f64| !(rho.abs() >= lo && rho.abs() <= hi && p.abs() >= lo && p.abs() <= hi);
    for family in NodeFamily::ALL {
        let [rho, u, v, p] = field.points(family).components();
        for k in 0..rho.len() {
            if bad(rho[k], p[k]) || !u[k].is_finite() || !v[k].is_finite() {
                let (i, j) = field.mesh.ij(k);
                return Some(format!("{} rho = {:e}, p = {:e}", family.location(i, j), rho[k], p[k]));
            }
        }
    }
    let [rho, mx, my, e] = field.avg.components();
    for k in 0..rho.len() {
        if bad(rho[k], e[k]) || !mx[k].is_finite() || !my[k].is_finite() {
            let (i, j) = field.mesh.ij(k);
            return Some(format!("cell ({i}, {j}) average rho = {:e}, E = {:e}", rho[k], e[k]));
        }
    }
    None
}

/// Error measure of a problem with a known solution: L1 density for the
/// vortex, max point error for the wave packet.
pub fn solution_error(spec: &ProblemSpec, field: &DofField<f64>, t: f64) -> Result<Option<f64>> {
    match spec.id {
        ProblemId::Vortex => {
            let gas = spec.gas()?;
            let exact = |x, y| spec.exact(x, y, t).expect("vortex is exact");
            Ok(Some(l1_density_error(field, &gas, exact)?))
        }
        ProblemId::MixedPacket => Ok(Some(max_point_error(field, |x, y| spec.exact(x, y, t).expect("packet is exact")))),
        _ => Ok(None),
    }
}

/// Diagnostic integrals plus whatever error measures the problem supports.
pub fn sample(spec: &ProblemSpec, field: &DofField<f64>, t: f64) -> Result<DiagnosticSample> {
    let gas = spec.gas()?;
    let rec = Reconstruction::new(field, &gas)?;
    let integrals = diagnostics(&rec, &gas);
    let err = solution_error(spec, field, t)?;
    let (l1_error, max_error) = match spec.id {
        ProblemId::Vortex => (err, None),
        ProblemId::MixedPacket => (None, err),
        _ => (None, None),
    };
    let asymmetry = match spec.id {
        ProblemId::GaussianPulse => Some(pulse_asymmetry(&rec, 1.0 / spec.gamma, pulse_radius(spec, t))?),
        _ => None,
    };
    Ok(DiagnosticSample { time: t, integrals, l1_error, max_error, asymmetry })
}

fn pulse_radius(spec: &ProblemSpec, t: f64) -> f64 {
    spec.pulse_symmetric_radius(t).unwrap_or(f64::INFINITY)
}

/// Advances `field` from `t = 0` to `opts.t_final`. Solver failures and
/// out-of-bounds states end the run with [`RunStatus::Diverged`]; invalid
/// options are errors.
pub fn run_to_time(spec: &ProblemSpec, field: DofField<f64>, opts: &RunOptions) -> Result<RunOutcome> {
    run_to_time_observed(spec, field, opts, |_, _, _| {})
}

/// [`run_to_time`] that hands every accepted step's number, end time and
/// report to `observe`.
pub fn run_to_time_observed<F>(spec: &ProblemSpec, field: DofField<f64>, opts: &RunOptions, mut observe: F) -> Result<RunOutcome>
where
    F: FnMut(usize, f64, &StepReport),
{
    opts.validate()?;
    let gas = spec.gas()?;
    let step_options = StepOptions { guard: opts.guard, conservation_limit: opts.conservation_limit };
    let start = Instant::now();
    let mut series = DiagnosticSeries::new();
    let mut field = field;
    let mut t = 0.0;
    let mut steps = 0;
    let mut summary = RunSummary {
        status: RunStatus::Completed,
        time: 0.0,
        steps: 0,
        max_conservation: 0.0,
        max_nu: 0.0,
        max_cfl: 0.0,
        timings: PhaseTimings::default(),
        wall: Duration::ZERO,
    };
    series.push(sample(spec, &field, 0.0)?)?;
    let mut next_sample = opts.sample_interval.unwrap_or(f64::INFINITY);
    let mut warned = false;
    let diverge = |steps: usize, t: f64, reason: String| RunStatus::Diverged { step: steps, time: t, reason };

    while t < opts.t_final {
        if steps >= opts.max_steps {
            return Err(Error::InvalidParameter(format!("step limit {} reached at t = {t}", opts.max_steps)));
        }
        let dt = match cfl_time_step(&field, &gas, opts.cfl) {
            Ok(dt) => dt,
            Err(e) => {
                summary.status = diverge(steps, t, e.to_string());
                break;
            }
        };
        let remaining = opts.t_final - t;
        let (dt, last) = if dt >= remaining * (1.0 - 1e-12) { (remaining, true) } else { (dt, false) };
        match advance_step(&field, &gas, opts.scheme, dt, &step_options) {
            Ok((next, report)) => {
                steps += 1;
                t = if last { opts.t_final } else { t + dt };
                if let Some(reason) = blowup(&next) {
                    summary.status = diverge(steps, t, reason);
                    break;
                }
                field = next;
                if opts.scheme != Scheme::SemiDiscrete && report.max_nu > NU_LIMIT && !warned {
                    log::warn!("step {steps}: acoustic CFL {:.3} exceeds {NU_LIMIT}; stencils are extrapolated", report.max_nu);
                    warned = true;
                }
                observe(steps, t, &report);
                summary.max_conservation = summary.max_conservation.max(report.max_residual());
                summary.max_nu = summary.max_nu.max(report.max_nu);
                summary.max_cfl = summary.max_cfl.max(report.max_cfl);
                summary.timings.reconstruction += report.timings.reconstruction;
                summary.timings.points += report.timings.points;
                summary.timings.fluxes += report.timings.fluxes;
                summary.timings.averages += report.timings.averages;
            }
            Err(e) => {
                summary.status = diverge(steps + 1, t + dt, e.to_string());
                break;
            }
        }
        if t >= next_sample && t < opts.t_final {
            series.push(sample(spec, &field, t)?)?;
            while next_sample <= t {
                next_sample += opts.sample_interval.unwrap_or(f64::INFINITY);
            }
        }
        if steps % 500 == 0 {
            log::info!("{} step {steps}: t = {t:.6}", opts.scheme);
        }
    }
    if summary.status.completed() && t > 0.0 {
        series.push(sample(spec, &field, t)?)?;
    }
    summary.time = t;
    summary.steps = steps;
    summary.wall = start.elapsed();
    Ok(RunOutcome { field, summary, series })
}

/// Samples the initial field of `spec` on an `nx`-cell-wide mesh and runs it.
pub fn run_problem(spec: &ProblemSpec, nx: usize, opts: &RunOptions) -> Result<RunOutcome> {
    let field = spec.initial_field(spec.mesh(nx)?)?;
    run_to_time(spec, field, opts)
}

/// Error on one mesh of a refinement study.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub h: f64,
    pub error: f64,
    /// `log2` ratio to the previous mesh, scaled by the ratio of spacings.
    pub rate: Option<f64>,
}

/// Fills the rate column of consecutive rows.
pub fn with_rates(rows: &mut [ConvergenceRow]) {
    for k in 0..rows.len() {
        rows[k].rate = if k == 0 {
            None
        } else {
            let (a, b) = (rows[k - 1], rows[k]);
            Some((a.error / b.error).ln() / (a.h / b.h).ln())
        };
    }
}

pub fn convergence_csv(label: &str, rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("scheme,n,h,error,rate\n");
    for r in rows {
        let rate = r.rate.map(|x| format!("{x:.4}")).unwrap_or_default();
        let _ = writeln!(out, "{label},{},{:.10e},{:.10e},{rate}", r.n, r.h, r.error);
    }
    out
}

/// One step of the mixed wave packet with `dt = 0.45 h / c0`; max point
/// error on each mesh.
pub fn mixed_packet_table(spec: &ProblemSpec, scheme: Scheme, ns: &[usize]) -> Result<Vec<ConvergenceRow>> {
    let gas = spec.gas()?;
    let c0 = gas.sound_speed(&spec.packet().ok_or_else(|| Error::InvalidParameter("not a packet problem".into()))?.base);
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let mesh = spec.mesh(n)?;
        let field = spec.initial_field(mesh)?;
        let dt = 0.45 * mesh.h / c0;
        let (next, _) = advance_step(&field, &gas, scheme, dt, &StepOptions::default())?;
        rows.push(ConvergenceRow { n, h: mesh.h, error: mixed_packet_error_at(spec, &next, dt), rate: None });
    }
    with_rates(&mut rows);
    Ok(rows)
}

fn mixed_packet_error_at(spec: &ProblemSpec, field: &DofField<f64>, t: f64) -> f64 {
    max_point_error(field, |x, y| spec.exact(x, y, t).expect("packet is exact"))
}

/// Runs `spec` to its final time on each mesh and records the final error.
pub fn convergence_study(spec: &ProblemSpec, ns: &[usize], opts: &RunOptions) -> Result<Vec<ConvergenceRow>> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let out = run_problem(spec, n, opts)?;
        if let RunStatus::Diverged { step, time, reason } = &out.summary.status {
            return Err(Error::InvalidParameter(format!("{n} cells diverged at step {step}, t = {time}: {reason}")));
        }
        let error = solution_error(spec, &out.field, out.summary.time)?
            .ok_or_else(|| Error::InvalidParameter(format!("{} has no exact solution", spec.id.name())))?;
        rows.push(ConvergenceRow { n, h: out.field.mesh.h, error, rate: None });
    }
    with_rates(&mut rows);
    Ok(rows)
}

/// Outcome of one CFL number in a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct CflPoint {
    pub cfl: f64,
    pub status: RunStatus,
    pub error: Option<f64>,
}

/// Runs `spec` at each CFL number with the guard overridden.
pub fn cfl_sweep(spec: &ProblemSpec, n: usize, scheme: Scheme, cfls: &[f64]) -> Result<Vec<CflPoint>> {
    let mut points = Vec::with_capacity(cfls.len());
    for &cfl in cfls {
        let opts = RunOptions::new(scheme, cfl, spec.t_final).override_guard();
        let out = run_problem(spec, n, &opts)?;
        let error = match out.summary.status {
            RunStatus::Completed => solution_error(spec, &out.field, out.summary.time)?,
            RunStatus::Diverged { .. } => None,
        };
        points.push(CflPoint { cfl, status: out.summary.status, error });
    }
    Ok(points)
}

/// Whether the completed part of an error-versus-CFL curve dips: its
/// smallest error lies strictly inside the range and is below both ends.
pub fn is_u_shaped(points: &[CflPoint]) -> bool {
    let errs: Vec<f64> = points.iter().map_while(|p| p.error).collect();
    if errs.len() < 3 {
        return false;
    }
    let (m, &min) = errs
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty");
    m > 0 && m + 1 < errs.len() && min < errs[0] && min < errs[errs.len() - 1]
}

pub fn cfl_sweep_csv(label: &str, n: usize, points: &[CflPoint]) -> String {
    let mut out = String::from("scheme,n,cfl,status,error\n");
    for p in points {
        let status = if p.status.completed() { "completed" } else { "diverged" };
        let err = p.error.map(|e| format!("{e:.10e}")).unwrap_or_default();
        let _ = writeln!(out, "{label},{n},{},{status},{err}", p.cfl);
    }
    out
}

/// Pulse results on one mesh.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PulseRow {
    pub n: usize,
    pub h: f64,
    pub asymmetry: f64,
    /// Against the finest mesh; absent on the finest mesh itself.
    pub pressure_error: Option<f64>,
}

/// Runs the Gaussian pulse on each mesh (coarse to fine) and measures the
/// radial asymmetry inside the image-free disc and the point pressure error
/// against the finest run.
pub fn pulse_study(spec: &ProblemSpec, ns: &[usize], opts: &RunOptions) -> Result<Vec<PulseRow>> {
    let gas: GasModel<f64> = spec.gas()?;
    let mut fields = Vec::with_capacity(ns.len());
    for &n in ns {
        let out = run_problem(spec, n, opts)?;
        if let RunStatus::Diverged { step, time, reason } = &out.summary.status {
            return Err(Error::InvalidParameter(format!("pulse on {n} cells diverged at step {step}, t = {time}: {reason}")));
        }
        fields.push(out.field);
    }
    let finest = Reconstruction::new(fields.last().ok_or_else(|| Error::InvalidParameter("no meshes".into()))?, &gas)?;
    let mut rows = Vec::with_capacity(ns.len());
    for (k, field) in fields.iter().enumerate() {
        let rec = Reconstruction::new(field, &gas)?;
        let pressure_error = if k + 1 < fields.len() { Some(max_pressure_difference(field, &finest)?) } else { None };
        let asymmetry = pulse_asymmetry(&rec, 1.0 / spec.gamma, pulse_radius(spec, opts.t_final))?;
        rows.push(PulseRow { n: ns[k], h: field.mesh.h, asymmetry, pressure_error });
    }
    Ok(rows)
}

pub fn pulse_csv(rows: &[PulseRow]) -> String {
    let mut out = String::from("n,h,asymmetry,pressure_error\n");
    for r in rows {
        let e = r.pressure_error.map(|e| format!("{e:.10e}")).unwrap_or_default();
        let _ = writeln!(out, "{},{:.10e},{:.10e},{e}", r.n, r.h, r.asymmetry);
    }
    out
}

/// Least-squares slope of `log(value)` against `log(h)`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
