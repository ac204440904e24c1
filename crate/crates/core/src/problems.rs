//! Test problems, their exact solutions where known, error measures and
//! integral diagnostics.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euler::{GasModel, LinearEigenmode, LinearPacket, ModeKind, PrimitiveState};
use crate::grid::{ConservativeArray, DofField, Mesh, NodeFamily, PrimitiveArray, Reconstruction};
use crate::scalar::{pairwise_sum, Real};

const GAUSS_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_664,
];
const GAUSS_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_1,
    0.478_628_670_499_366_5,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
];
const SIMPSON: [f64; 3] = [1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0];

/// Samples `f` at every point node and sets each cell average to the 5x5
/// Gauss-Legendre mean of the conservative variables of `f`.
pub fn sample_field<T: Real, F>(mesh: Mesh<T>, gas: &GasModel<T>, f: &F) -> Result<DofField<T>>
where
    F: Fn(T, T) -> PrimitiveState<T> + Sync + ?Sized,
{
    let n = mesh.len();
    let family = |family: NodeFamily| -> Result<PrimitiveArray<T>> {
        let states = (0..n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                let [x, y] = family.position(&mesh, i, j);
                let w = f(x, y);
                if w.is_physical() {
                    Ok(w)
                } else {
                    Err(Error::InvalidState { location: family.location(i, j), rho: w.rho.as_f64(), p: w.p.as_f64() })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PrimitiveArray::from_states(&states))
    };
    let half = mesh.h * T::lit(0.5);
    let avg = (0..n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = mesh.ij(k);
            let [xc, yc] = mesh.cell_center(i, j);
            let mut acc = crate::euler::ConservativeState::zero();
            for (a, &sa) in GAUSS_NODES.iter().enumerate() {
                for (b, &sb) in GAUSS_NODES.iter().enumerate() {
                    let w = f(xc + half * T::lit(sa), yc + half * T::lit(sb));
                    acc += gas.prim_to_cons(w)? * T::lit(GAUSS_WEIGHTS[a] * GAUSS_WEIGHTS[b] * 0.25);
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DofField {
        mesh,
        avg: ConservativeArray::from_states(&avg),
        vert: family(NodeFamily::Vertex)?,
        evert: family(NodeFamily::VerticalEdge)?,
        ehorz: family(NodeFamily::HorizontalEdge)?,
    })
}

/// The five benchmark problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemId {
    MixedPacket,
    Vortex,
    GaussianPulse,
    LowMachShear,
    KelvinHelmholtz,
}

impl ProblemId {
    pub const ALL: [ProblemId; 5] = [
        ProblemId::MixedPacket,
        ProblemId::Vortex,
        ProblemId::GaussianPulse,
        ProblemId::LowMachShear,
        ProblemId::KelvinHelmholtz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemId::MixedPacket => "mixed-packet",
            ProblemId::Vortex => "vortex",
            ProblemId::GaussianPulse => "gaussian-pulse",
            ProblemId::LowMachShear => "low-mach-shear",
            ProblemId::KelvinHelmholtz => "kelvin-helmholtz",
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        match key.as_str() {
            "mixed-packet" | "packet" => Ok(ProblemId::MixedPacket),
            "vortex" | "isentropic-vortex" => Ok(ProblemId::Vortex),
            "gaussian-pulse" | "pulse" => Ok(ProblemId::GaussianPulse),
            "low-mach-shear" | "shear" => Ok(ProblemId::LowMachShear),
            "kelvin-helmholtz" | "kh" => Ok(ProblemId::KelvinHelmholtz),
            _ => Err(Error::InvalidParameter(format!("unknown problem '{s}'"))),
        }
    }
}

/// Problem-specific parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ProblemParams {
    MixedPacket { mach: f64, angle_deg: f64, amplitude: f64 },
    Vortex { beta: f64, u_inf: f64, v_inf: f64, x0: f64, y0: f64 },
    GaussianPulse { amplitude: f64, alpha: f64 },
    LowMachShear { r: f64, mach: f64, delta: f64 },
    KelvinHelmholtz { amplitude: f64 },
}

/// A problem instance: domain, parameters, final time and gas.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProblemSpec {
    pub id: ProblemId,
    pub origin: [f64; 2],
    pub extent: [f64; 2],
    pub t_final: f64,
    pub gamma: f64,
    pub params: ProblemParams,
}

impl ProblemSpec {
    /// Default parameters of each benchmark.
    pub fn new(id: ProblemId) -> Self {
        let (origin, extent, t_final, params) = match id {
            ProblemId::MixedPacket => {
                ([0.0, 0.0], [1.0, 1.0], 0.0, ProblemParams::MixedPacket { mach: 0.4, angle_deg: 25.0, amplitude: 1e-6 })
            }
            ProblemId::Vortex => (
                [0.0, -5.0],
                [10.0, 10.0],
                10.0,
                ProblemParams::Vortex { beta: 5.0, u_inf: 1.0, v_inf: 0.0, x0: 5.0, y0: 0.0 },
            ),
            ProblemId::GaussianPulse => {
                ([-2.5, -2.5], [5.0, 5.0], 2.5, ProblemParams::GaussianPulse { amplitude: 0.25, alpha: 20.0 })
            }
            ProblemId::LowMachShear => {
                ([0.0, -0.5], [2.0, 1.0], 80.0, ProblemParams::LowMachShear { r: 1e-3, mach: 1e-2, delta: 0.1 })
            }
            ProblemId::KelvinHelmholtz => {
                ([-1.0, -1.0], [2.0, 2.0], 15.0, ProblemParams::KelvinHelmholtz { amplitude: 0.1 })
            }
        };
        Self { id, origin, extent, t_final, gamma: 1.4, params }
    }

    /// Overrides one named parameter.
    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        let unknown = || Error::InvalidParameter(format!("problem {} has no parameter '{key}'", self.id));
        match key {
            "gamma" => self.gamma = value,
            "t_final" | "tfinal" => self.t_final = value,
            _ => match (&mut self.params, key) {
                (ProblemParams::MixedPacket { mach, .. }, "mach") => *mach = value,
                (ProblemParams::MixedPacket { angle_deg, .. }, "angle_deg") => *angle_deg = value,
                (ProblemParams::MixedPacket { amplitude, .. }, "amplitude") => *amplitude = value,
                (ProblemParams::Vortex { beta, .. }, "beta") => *beta = value,
                (ProblemParams::Vortex { u_inf, .. }, "u_inf") => *u_inf = value,
                (ProblemParams::Vortex { v_inf, .. }, "v_inf") => *v_inf = value,
                (ProblemParams::GaussianPulse { amplitude, .. }, "amplitude") => *amplitude = value,
                (ProblemParams::GaussianPulse { alpha, .. }, "alpha") => *alpha = value,
                (ProblemParams::LowMachShear { r, .. }, "r") => *r = value,
                (ProblemParams::LowMachShear { mach, .. }, "mach") => *mach = value,
                (ProblemParams::LowMachShear { delta, .. }, "delta") => *delta = value,
                (ProblemParams::KelvinHelmholtz { amplitude }, "amplitude") => *amplitude = value,
                _ => return Err(unknown()),
            },
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameter(format!("{}: {what}", self.id)));
        if !(self.gamma > 1.0) {
            return bad("gamma must exceed 1");
        }
        if !(self.t_final >= 0.0) {
            return bad("final time must be non-negative");
        }
        if !(self.extent[0] > 0.0 && self.extent[1] > 0.0) {
            return bad("domain extents must be positive");
        }
        match self.params {
            ProblemParams::MixedPacket { mach, amplitude, .. } if mach < 0.0 || amplitude < 0.0 => {
                bad("Mach number and amplitude must be non-negative")
            }
            ProblemParams::Vortex { beta, .. } if beta < 0.0 => bad("beta must be non-negative"),
            ProblemParams::GaussianPulse { amplitude, alpha } if amplitude <= -1.0 || alpha <= 0.0 => {
                bad("amplitude must exceed -1 and alpha must be positive")
            }
            ProblemParams::LowMachShear { r, mach, delta } if r < 0.0 || mach < 0.0 || delta < 0.0 => {
                bad("R, M and delta must be non-negative")
            }
            _ => Ok(()),
        }
    }

    pub fn gas(&self) -> Result<GasModel<f64>> {
        GasModel::new(self.gamma)
    }

    /// Mesh with `nx` cells in x and square cells.
    pub fn mesh(&self, nx: usize) -> Result<Mesh<f64>> {
        let ny = (nx as f64 * self.extent[1] / self.extent[0]).round() as usize;
        Mesh::new(nx, ny, self.origin, self.extent)
    }

    /// Radius about the pulse center within which the periodic solution at
    /// time `t` is still radially symmetric. The nearest periodic image sits
    /// `min(lx, ly)` away, the initial perturbation is below `1e-10 A` beyond
    /// `r0 = sqrt(ln(1e10) / alpha)`, and no signal outruns the largest initial
    /// sound speed.
    pub fn pulse_symmetric_radius(&self, t: f64) -> Option<f64> {
        let ProblemParams::GaussianPulse { amplitude, alpha } = self.params else {
            return None;
        };
        let c_max = (1.0 + amplitude.max(0.0)).powf(0.5 * (self.gamma - 1.0));
        let r0 = (1e10f64.ln() / alpha).sqrt();
        Some((self.extent[0].min(self.extent[1]) - c_max * t - r0).max(0.0))
    }

    /// Background state and modes of the mixed packet.
    pub fn packet(&self) -> Option<LinearPacket<f64>> {
        let ProblemParams::MixedPacket { mach, angle_deg, amplitude } = self.params else {
            return None;
        };
        let phi = angle_deg.to_radians();
        let base = PrimitiveState::new(1.0, mach * phi.cos(), mach * phi.sin(), 1.0);
        let mode = |kind, k: [f64; 2]| LinearEigenmode::new(kind, [TAU * k[0], TAU * k[1]], amplitude).expect("nonzero wavevector");
        Some(LinearPacket {
            base,
            modes: vec![
                mode(ModeKind::Entropy, [1.0, 2.0]),
                mode(ModeKind::Shear, [2.0, 1.0]),
                mode(ModeKind::AcousticPlus, [3.0, 2.0]),
                mode(ModeKind::AcousticMinus, [2.0, 3.0]),
            ],
        })
    }

    /// Initial primitive state at `(x, y)`.
    pub fn primitive(&self, x: f64, y: f64) -> PrimitiveState<f64> {
        self.state_at(x, y, 0.0)
    }

    /// Exact solution, where one is known.
    pub fn exact(&self, x: f64, y: f64, t: f64) -> Option<PrimitiveState<f64>> {
        match self.id {
            ProblemId::MixedPacket | ProblemId::Vortex => Some(self.state_at(x, y, t)),
            _ if t == 0.0 => Some(self.primitive(x, y)),
            _ => None,
        }
    }

    fn state_at(&self, x: f64, y: f64, t: f64) -> PrimitiveState<f64> {
        let g = self.gamma;
        match self.params {
            ProblemParams::MixedPacket { .. } => {
                let gas = GasModel::new(g).expect("validated gamma");
                self.packet().expect("packet parameters").evaluate(&gas, x, y, t)
            }
            ProblemParams::Vortex { beta, u_inf, v_inf, x0, y0 } => {
                let dx = wrap(x - x0 - u_inf * t, self.extent[0]);
                let dy = wrap(y - y0 - v_inf * t, self.extent[1]);
                let r2 = dx * dx + dy * dy;
                let s = beta / (2.0 * PI) * (0.5 * (1.0 - r2)).exp();
                let temp = 1.0 - (g - 1.0) * beta * beta / (8.0 * g * PI * PI) * (1.0 - r2).exp();
                let rho = temp.powf(1.0 / (g - 1.0));
                PrimitiveState::new(rho, u_inf - s * dy, v_inf + s * dx, rho.powf(g))
            }
            ProblemParams::GaussianPulse { amplitude, alpha } => {
                let rho = 1.0 + amplitude * (-alpha * (x * x + y * y)).exp();
                PrimitiveState::new(rho, 0.0, 0.0, rho.powf(g) / g)
            }
            ProblemParams::LowMachShear { r, mach, delta } => {
                let a = shear_profile(y);
                PrimitiveState::new(g + r * (1.0 - 2.0 * a), mach * (1.0 - 2.0 * a), delta * mach * (TAU * x).sin(), 1.0)
            }
            ProblemParams::KelvinHelmholtz { amplitude } => {
                let b = (15.0 * y + 7.5).tanh() - (15.0 * y - 7.5).tanh();
                PrimitiveState::new(0.5 + 0.75 * b, 0.5 * (b - 1.0), amplitude * (TAU * x).sin(), 1.0)
            }
        }
    }

    /// Initial degrees of freedom on `mesh`.
    pub fn initial_field(&self, mesh: Mesh<f64>) -> Result<DofField<f64>> {
        self.validate()?;
        sample_field(mesh, &self.gas()?, &|x, y| self.primitive(x, y))
    }
}

/// Periodic minimum image of `d` on a period `l`.
fn wrap(d: f64, l: f64) -> f64 {
    d - l * (d / l).round()
}

/// Band indicator of the low-Mach shear layer with sine ramps.
pub fn shear_profile(y: f64) -> f64 {
    if (-9.0 / 32.0..-7.0 / 32.0).contains(&y) {
        0.5 * (1.0 + (16.0 * PI * (y + 0.25)).sin())
    } else if (-7.0 / 32.0..7.0 / 32.0).contains(&y) {
        1.0
    } else if (7.0 / 32.0..9.0 / 32.0).contains(&y) {
        0.5 * (1.0 - (16.0 * PI * (y - 0.25)).sin())
    } else {
        0.0
    }
}

pub fn init_mixed_packet(mesh: Mesh<f64>) -> Result<DofField<f64>> {
    ProblemSpec::new(ProblemId::MixedPacket).initial_field(mesh)
}

pub fn init_vortex(mesh: Mesh<f64>) -> Result<DofField<f64>> {
    ProblemSpec::new(ProblemId::Vortex).initial_field(mesh)
}

pub fn init_gaussian_pulse(mesh: Mesh<f64>) -> Result<DofField<f64>> {
    ProblemSpec::new(ProblemId::GaussianPulse).initial_field(mesh)
}

pub fn init_low_mach_shear(mesh: Mesh<f64>) -> Result<DofField<f64>> {
    ProblemSpec::new(ProblemId::LowMachShear).initial_field(mesh)
}

pub fn init_kh(mesh: Mesh<f64>) -> Result<DofField<f64>> {
    ProblemSpec::new(ProblemId::KelvinHelmholtz).initial_field(mesh)
}

/// Largest deviation over every point node and all four primitive
/// variables from `exact`.
pub fn max_point_error<F>(field: &DofField<f64>, exact: F) -> f64
where
    F: Fn(f64, f64) -> PrimitiveState<f64> + Sync,
{
    let mesh = field.mesh;
    NodeFamily::ALL
        .iter()
        .map(|&family| {
            let pts = field.points(family);
            (0..mesh.len())
                .into_par_iter()
                .map(|k| {
                    let (i, j) = mesh.ij(k);
                    let [x, y] = family.position(&mesh, i, j);
                    pts.get(k).max_abs_diff(exact(x, y))
                })
                .reduce(|| 0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

/// Max-norm point error of the mixed packet against its exact linear
/// solution at time `t`.
pub fn mixed_packet_error(spec: &ProblemSpec, field: &DofField<f64>, t: f64) -> f64 {
    max_point_error(field, |x, y| spec.exact(x, y, t).expect("packet has an exact solution"))
}

/// Mean absolute deviation of the cell-average density from the
/// Gauss-Legendre average of `exact`.
pub fn l1_density_error<F>(field: &DofField<f64>, gas: &GasModel<f64>, exact: F) -> Result<f64>
where
    F: Fn(f64, f64) -> PrimitiveState<f64> + Sync,
{
    let reference = sample_field(field.mesh, gas, &exact)?;
    let diffs: Vec<f64> = (0..field.mesh.len()).map(|k| (field.avg.get(k).rho - reference.avg.get(k).rho).abs()).collect();
    Ok(pairwise_sum(&diffs) / field.mesh.len() as f64)
}

/// Largest pressure difference at the point nodes of `field` against the
/// reconstruction of a finer `reference` solution.
pub fn max_pressure_difference(field: &DofField<f64>, reference: &Reconstruction<f64>) -> Result<f64> {
    let mesh = field.mesh;
    let mut worst = 0.0f64;
    for family in NodeFamily::ALL {
        let pts = field.points(family);
        for k in 0..mesh.len() {
            let (i, j) = mesh.ij(k);
            let [x, y] = family.position(&mesh, i, j);
            worst = worst.max((pts.get(k).p - reference.eval(x, y)?.p).abs());
        }
    }
    Ok(worst)
}

/// Radial asymmetry of the pressure about the domain center. The
/// reconstruction is sampled on circles of radius `k h / 4` at 33 angles in
/// `[0, pi/2]`, out to the inscribed circle. The largest spread on a circle
/// of radius at most `r_max` is divided by the largest deviation of any
/// circle mean from `p_ambient`.
pub fn pulse_asymmetry(rec: &Reconstruction<f64>, p_ambient: f64, r_max: f64) -> Result<f64> {
    const ANGLES: usize = 33;
    let mesh = rec.mesh;
    let r_outer = 0.5 * (mesh.lx.min(mesh.ly)) - mesh.h;
    let steps = (r_outer / (0.25 * mesh.h)).floor() as usize;
    let rows = (1..=steps)
        .into_par_iter()
        .map(|s| {
            let r = s as f64 * 0.25 * mesh.h;
            let (cx, cy) = (mesh.x0 + 0.5 * mesh.lx, mesh.y0 + 0.5 * mesh.ly);
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            let mut sum = 0.0;
            for a in 0..ANGLES {
                let theta = 0.5 * PI * a as f64 / (ANGLES - 1) as f64;
                let p = rec.eval(cx + r * theta.cos(), cy + r * theta.sin())?.p;
                lo = lo.min(p);
                hi = hi.max(p);
                sum += p;
            }
            let spread = if r <= r_max { hi - lo } else { 0.0 };
            Ok((spread, (sum / ANGLES as f64 - p_ambient).abs()))
        })
        .collect::<Result<Vec<_>>>()?;
    let spread = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    let amplitude = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    if amplitude <= 1e-13 * p_ambient.abs().max(1.0) {
        return Ok(0.0);
    }
    Ok(spread / amplitude)
}

/// Domain integrals of one field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Diagnostics {
    /// `-int rho log(p / rho^gamma) dA`.
    pub entropy: f64,
    /// `int (v_x - u_y) dA`.
    pub vorticity: f64,
    /// `int (v_x - u_y)^2 dA`.
    pub enstrophy: f64,
}

/// Integrals over the biquadratic reconstruction, each cell by 3x3 Simpson
/// quadrature of the nodal values.
pub fn diagnostics(rec: &Reconstruction<f64>, gas: &GasModel<f64>) -> Diagnostics {
    let h = rec.mesh.h;
    let area = rec.mesh.cell_area();
    let per_cell: Vec<[f64; 3]> = rec
        .cells
        .par_iter()
        .map(|cell| {
            let mut acc = [0.0; 3];
            for a in 0..3 {
                for b in 0..3 {
                    let wt = SIMPSON[a] * SIMPSON[b] * area;
                    let w = cell.w[a][b];
                    let s = -w.rho * (w.p / w.rho.powf(gas.gamma())).ln();
                    let (dx, dy) = cell.gradient(a as f64 - 1.0, b as f64 - 1.0, h);
                    let omega = dx.v - dy.u;
                    acc[0] += wt * s;
                    acc[1] += wt * omega;
                    acc[2] += wt * omega * omega;
                }
            }
            acc
        })
        .collect();
    let sum = |m: usize| pairwise_sum(&per_cell.iter().map(|c| c[m]).collect::<Vec<_>>());
    Diagnostics { entropy: sum(0), vorticity: sum(1), enstrophy: sum(2) }
}

/// One sample of a diagnostic time series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagnosticSample {
    pub time: f64,
    pub integrals: Diagnostics,
    pub l1_error: Option<f64>,
    pub max_error: Option<f64>,
    pub asymmetry: Option<f64>,
}

/// Time series with strictly increasing timestamps.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiagnosticSeries {
    samples: Vec<DiagnosticSample>,
}

impl DiagnosticSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, sample: DiagnosticSample) -> Result<()> {
        if let Some(last) = self.samples.last() {
            if !(sample.time > last.time) {
                return Err(Error::InvalidParameter(format!(
                    "diagnostic time {} does not follow {}",
                    sample.time, last.time
                )));
            }
        }
        self.samples.push(sample);
        Ok(())
    }

    pub fn samples(&self) -> &[DiagnosticSample] {
        &self.samples
    }

    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.16e}")).unwrap_or_default();
        let mut out = String::from("time,entropy,vorticity,enstrophy,l1_error,max_error,asymmetry\n");
        for s in &self.samples {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e},{},{},{}\n",
                s.time,
                s.integrals.entropy,
                s.integrals.vorticity,
                s.integrals.enstrophy,
                opt(s.l1_error),
                opt(s.max_error),
                opt(s.asymmetry)
            ));
        }
        out
    }
}
