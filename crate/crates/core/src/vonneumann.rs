//! Fourier symbols of the vertical-edge point update about a uniform state.
//!
//! A single plane wave `exp(i k.(x - P))` is sampled on the nodes of the two
//! cells sharing the edge node `P`, with the center nodes obtained from the
//! exact cell averages through the Simpson inversion. Contracting these phase
//! arrays with the acoustic stencils gives the pressure gain of one acoustic
//! branch. Wavenumbers are scaled by the mesh size: `xi = kx h`,
//! `eta = ky h`, and `nu = c0 dt / h`.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::acoustic::{StencilSet, LEFT_HALF, NU_LIMIT, RIGHT_HALF};
use crate::error::{Error, Result};
use crate::euler::{GasModel, PrimitiveState};
use crate::grid::{lagrange_weights, DofField, Mesh, Reconstruction};
use crate::point_update::footpoint;
use crate::semidiscrete::{primitive_advection, split_jacobian};

/// 3x3 complex array indexed `[a][b]` like the cell nodes.
pub type PhaseArray = [[Complex64; 3]; 3];

/// 4x4 complex matrix acting on `(rho, u, v, p)`.
pub type Symbol = [[Complex64; 4]; 4];

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn cis(phase: f64) -> Complex64 {
    Complex64::from_polar(1.0, phase)
}

fn sinc(z: f64) -> f64 {
    if z.abs() < 1e-8 {
        1.0 - z * z / 6.0
    } else {
        z.sin() / z
    }
}

/// Cell-average factor `sinc(xi/2) sinc(eta/2)`.
pub fn sigma(xi: f64, eta: f64) -> f64 {
    sinc(0.5 * xi) * sinc(0.5 * eta)
}

/// One plane wave seen from a vertical-edge node.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveConfig {
    pub xi: f64,
    pub eta: f64,
    pub nu: f64,
    /// Acoustic branch, `+1` or `-1`.
    pub branch: i32,
    pub background: PrimitiveState<f64>,
    pub gas: GasModel<f64>,
}

impl WaveConfig {
    pub fn new(xi: f64, eta: f64, nu: f64, branch: i32, background: PrimitiveState<f64>, gas: GasModel<f64>) -> Result<Self> {
        if !(0.0..=NU_LIMIT).contains(&nu) {
            return Err(Error::InvalidParameter(format!("nu = {nu} outside [0, {NU_LIMIT}]")));
        }
        if branch != 1 && branch != -1 {
            return Err(Error::InvalidParameter(format!("acoustic branch must be +1 or -1, got {branch}")));
        }
        if !xi.is_finite() || !eta.is_finite() {
            return Err(Error::InvalidParameter("non-finite wavenumber".into()));
        }
        background.validate()?;
        Ok(Self { xi, eta, nu, branch, background, gas })
    }

    /// Wave of scaled magnitude `kh` travelling at angle `theta`.
    pub fn polar(kh: f64, theta: f64, nu: f64, branch: i32, background: PrimitiveState<f64>, gas: GasModel<f64>) -> Result<Self> {
        Self::new(kh * theta.cos(), kh * theta.sin(), nu, branch, background, gas)
    }

    /// `kappa = |k| h`.
    pub fn kappa(&self) -> f64 {
        self.xi.hypot(self.eta)
    }

    /// Unit wavevector; zero when `kappa = 0`, where the branch carries no
    /// velocity.
    pub fn direction(&self) -> [f64; 2] {
        let k = self.kappa();
        if k == 0.0 {
            [0.0, 0.0]
        } else {
            [self.xi / k, self.eta / k]
        }
    }

    pub fn sound_speed(&self) -> f64 {
        self.gas.sound_speed(&self.background)
    }

    /// Advective phase `(u0 kx + v0 ky) dt`.
    pub fn advective_phase(&self) -> f64 {
        (self.background.u * self.xi + self.background.v * self.eta) * self.nu / self.sound_speed()
    }

    /// Primitive amplitudes of the branch for unit pressure amplitude.
    pub fn eigenvector(&self) -> [f64; 4] {
        let c = self.sound_speed();
        let z = self.background.rho * c;
        let s = self.branch as f64;
        let [kx, ky] = self.direction();
        [1.0 / (c * c), s * kx / z, s * ky / z, 1.0]
    }
}

/// Value at the center node of a cell whose center sits at `offset` (in
/// units of `h`) from the reference point, recovered from the exact cell
/// average of the plane wave.
pub fn center_fourier_factor(xi: f64, eta: f64, offset: [f64; 2]) -> Complex64 {
    let at = |dx: f64, dy: f64| cis(xi * (offset[0] + dx) + eta * (offset[1] + dy));
    let corners = at(-0.5, -0.5) + at(0.5, -0.5) + at(-0.5, 0.5) + at(0.5, 0.5);
    let edges = at(-0.5, 0.0) + at(0.5, 0.0) + at(0.0, -0.5) + at(0.0, 0.5);
    (at(0.0, 0.0) * sigma(xi, eta) - corners / 36.0 - edges / 9.0) * 2.25
}

/// Plane wave sampled on the nine nodes of a cell centered at `offset`.
fn cell_phases(xi: f64, eta: f64, offset: [f64; 2]) -> PhaseArray {
    let mut phi = [[ZERO; 3]; 3];
    for (a, row) in phi.iter_mut().enumerate() {
        for (b, entry) in row.iter_mut().enumerate() {
            let dx = offset[0] + 0.5 * (a as f64 - 1.0);
            let dy = offset[1] + 0.5 * (b as f64 - 1.0);
            *entry = cis(xi * dx + eta * dy);
        }
    }
    phi[1][1] = center_fourier_factor(xi, eta, offset);
    phi
}

/// Phase arrays `(right, left)` of the two cells sharing a vertical-edge
/// node, measured relative to that node.
pub fn phase_arrays(xi: f64, eta: f64) -> (PhaseArray, PhaseArray) {
    (cell_phases(xi, eta, [0.5, 0.0]), cell_phases(xi, eta, [-0.5, 0.0]))
}

fn contract(m: &[[f64; 3]; 3], phi: &PhaseArray) -> Complex64 {
    let mut acc = ZERO;
    for a in 0..3 {
        for b in 0..3 {
            acc += phi[a][b] * m[a][b];
        }
    }
    acc
}

/// Acoustic pressure gain by contracting the half-plane stencils with the
/// phase arrays.
pub fn acoustic_pressure_gain_contraction(cfg: &WaveConfig) -> Complex64 {
    let (phi_r, phi_l) = phase_arrays(cfg.xi, cfg.eta);
    let s = cfg.branch as f64;
    let [kx, ky] = cfg.direction();
    let half = |st: StencilSet<f64>, phi: &PhaseArray| {
        contract(&st.pp, phi) + contract(&st.up, phi) * (s * kx) + contract(&st.vp, phi) * (s * ky)
    };
    half(RIGHT_HALF.at(cfg.nu), &phi_r) + half(LEFT_HALF.at(cfg.nu), &phi_l)
}

/// Polynomial coefficients of the collected gain at a given `nu` and `sigma`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GainCoefficients {
    pub p0: f64,
    pub px: f64,
    pub p_sigma: f64,
    pub py: f64,
    pub pxy: f64,
    pub phy: f64,
    pub uxy: f64,
    pub ux: f64,
    pub uhy: f64,
    pub u_sigma: f64,
    pub vxy: f64,
    pub vhy: f64,
    pub vy: f64,
}

impl GainCoefficients {
    pub fn new(nu: f64, sigma: f64) -> Self {
        let n = nu;
        let n2 = n * n;
        let n3 = n2 * n;
        Self {
            p0: -(n - 1.0) * (4.0 * n3 - 4.0 * n2 - 3.0 * n + 1.0),
            px: -n * (2.0 * n - 1.0) * (2.0 * n2 - n - 2.0) / 2.0,
            p_sigma: 1.5 * n * sigma * (4.0 * n3 - 6.0 * n2 - 3.0 * n + 3.0),
            py: n * (4.0 * n3 - 10.0 * n2 + 9.0 * n - 1.0) / 4.0,
            pxy: n * (4.0 * n3 - 2.0 * n2 + n - 1.0) / 8.0,
            phy: -n * (4.0 * n3 - 6.0 * n2 - n + 1.0) / 2.0,
            uxy: n * (9.0 * n3 - 4.0 * n2 + 3.0 * n - 3.0) / 24.0,
            ux: -n * (9.0 * n3 - 8.0 * n2 - 9.0 * n + 6.0) / 6.0,
            uhy: -n * (3.0 * n3 - 4.0 * n2 - n + 1.0) / 2.0,
            u_sigma: 1.5 * n * sigma * (3.0 * n3 - 4.0 * n2 - 3.0 * n + 3.0),
            vxy: n2 * (4.0 * n - 3.0) / 12.0,
            vhy: -n2 * (2.0 * n - 3.0) / 3.0,
            vy: n * (4.0 * n2 - 9.0 * n + 6.0) / 6.0,
        }
    }
}

/// Even pressure part and odd velocity parts `(P, U, V)` of the gain.
pub fn collected_parts(xi: f64, eta: f64, nu: f64) -> (f64, f64, f64) {
    let c = GainCoefficients::new(nu, sigma(xi, eta));
    let (cx, sx) = (xi.cos(), xi.sin());
    let (chx, shx) = ((0.5 * xi).cos(), (0.5 * xi).sin());
    let (chy, shy) = ((0.5 * eta).cos(), (0.5 * eta).sin());
    let p = c.p0
        + 2.0 * c.px * cx
        + 2.0 * c.p_sigma * chx
        + 2.0 * c.py * chy
        + 4.0 * c.pxy * cx * chy
        + 4.0 * c.phy * chx * chy;
    let u = 4.0 * c.uxy * sx * chy + 2.0 * c.ux * sx + 4.0 * c.uhy * shx * chy + 2.0 * c.u_sigma * shx;
    let v = 4.0 * c.vxy * cx * shy + 4.0 * c.vhy * chx * shy + 2.0 * c.vy * shy;
    (p, u, v)
}

/// Acoustic pressure gain from the collected trigonometric form.
pub fn acoustic_pressure_gain_collected(cfg: &WaveConfig) -> Complex64 {
    let (p, u, v) = collected_parts(cfg.xi, cfg.eta, cfg.nu);
    let [kx, ky] = cfg.direction();
    Complex64::new(p, -(cfg.branch as f64) * (kx * u + ky * v))
}

/// Exact gains of the branch over one step: acoustic phase only, and with
/// the background advection added.
pub fn exact_gains(cfg: &WaveConfig) -> (Complex64, Complex64) {
    let acoustic = cfg.branch as f64 * cfg.nu * cfg.kappa();
    (cis(-acoustic), cis(-(acoustic + cfg.advective_phase())))
}

/// Symbol of the discrete advective subsolver at the edge node: the
/// biquadratic reconstruction of the wave evaluated at the convective foot,
/// divided by the value at the node.
pub fn advection_symbol(cfg: &WaveConfig) -> Result<Complex64> {
    let n = 8;
    let h = 1.0;
    let mesh = Mesh::square(n, [0.0, 0.0], n as f64 * h)?;
    let field = DofField::uniform(mesh, &cfg.gas, cfg.background)?;
    let rec = Reconstruction::new(&field, &cfg.gas)?;
    let p = rec.mesh.vertical_edge(n / 2, n / 2);
    let tau = cfg.nu * h / cfg.sound_speed();
    let foot = footpoint(&rec, p, &cfg.background, tau)?;
    let xc = rec.mesh.cell_center(foot.i, foot.j);
    let offset = [(xc[0] - p[0]) / h, (xc[1] - p[1]) / h];
    let phi = cell_phases(cfg.xi, cfg.eta, offset);
    let (wx, wy) = (lagrange_weights(foot.xi), lagrange_weights(foot.eta));
    let mut acc = ZERO;
    for a in 0..3 {
        for b in 0..3 {
            acc += phi[a][b] * (wx[a] * wy[b]);
        }
    }
    Ok(acc)
}

/// Additive point update: `A_adv + g_ac - 1`.
pub fn full_gain(g_ac: Complex64, adv: Complex64) -> Complex64 {
    adv + g_ac - ONE
}

/// Transported increment update: `A_adv g_ac`.
pub fn transported_gain(g_ac: Complex64, adv: Complex64) -> Complex64 {
    adv * g_ac
}

/// Gains of one wave under the fully discrete point updates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GainResult {
    pub acoustic: Complex64,
    pub exact_acoustic: Complex64,
    pub exact: Complex64,
    pub advection: Complex64,
    pub full: Complex64,
    pub transported: Complex64,
}

impl GainResult {
    /// `|g_ac - exp(-i s nu kappa)|`.
    pub fn acoustic_error(&self) -> f64 {
        (self.acoustic - self.exact_acoustic).norm()
    }
}

pub fn gains(cfg: &WaveConfig) -> Result<GainResult> {
    let acoustic = acoustic_pressure_gain_collected(cfg);
    let (exact_acoustic, exact) = exact_gains(cfg);
    let advection = advection_symbol(cfg)?;
    Ok(GainResult {
        acoustic,
        exact_acoustic,
        exact,
        advection,
        full: full_gain(acoustic, advection),
        transported: transported_gain(acoustic, advection),
    })
}

fn real_matrix(columns: impl Fn(usize) -> [f64; 4]) -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    for k in 0..4 {
        let col = columns(k);
        for r in 0..4 {
            m[r][k] = col[r];
        }
    }
    m
}

fn unit(k: usize) -> PrimitiveState<f64> {
    let mut e = [0.0; 4];
    e[k] = 1.0;
    PrimitiveState::from_array(e)
}

/// Generator `M` of the semi-discrete edge-node update,
/// `dW/dt = M W` for a plane wave, on a mesh of size `h`.
pub fn semidiscrete_symbol(xi: f64, eta: f64, h: f64, background: &PrimitiveState<f64>, gas: &GasModel<f64>) -> Symbol {
    let (phi_r, phi_l) = phase_arrays(xi, eta);
    let d_left = (phi_l[0][1] - phi_l[1][1] * 4.0 + phi_l[2][1] * 3.0) / h;
    let d_right = (phi_r[0][1] * -3.0 + phi_r[1][1] * 4.0 - phi_r[2][1]) / h;
    let d_y = (cis(0.5 * eta) - cis(-0.5 * eta)) / h;
    let c = gas.sound_speed(background);
    let pos = real_matrix(|k| split_jacobian(background, c, &unit(k), 0).0.to_array());
    let neg = real_matrix(|k| split_jacobian(background, c, &unit(k), 0).1.to_array());
    let ay = real_matrix(|k| primitive_advection(gas, background, &PrimitiveState::zero(), &unit(k)).to_array());
    let mut m = [[ZERO; 4]; 4];
    for r in 0..4 {
        for k in 0..4 {
            m[r][k] = -(d_left * pos[r][k] + d_right * neg[r][k] + d_y * ay[r][k]);
        }
    }
    m
}

fn mat_vec(m: &Symbol, x: &[Complex64; 4]) -> [Complex64; 4] {
    let mut y = [ZERO; 4];
    for r in 0..4 {
        for k in 0..4 {
            y[r] += m[r][k] * x[k];
        }
    }
    y
}

/// `(I + Z + Z^2/2 + Z^3/6) x`, the SSPRK3 step of a linear system.
pub fn rk3_apply(z: &Symbol, x: &[Complex64; 4]) -> [Complex64; 4] {
    let z1 = mat_vec(z, x);
    let z2 = mat_vec(z, &z1);
    let z3 = mat_vec(z, &z2);
    std::array::from_fn(|r| x[r] + z1[r] + z2[r] / 2.0 + z3[r] / 6.0)
}

/// Pressure gain of one SSPRK3 step of the semi-discrete edge-node update
/// applied to the acoustic branch.
pub fn semidiscrete_pressure_gain(cfg: &WaveConfig) -> Complex64 {
    let m = semidiscrete_symbol(cfg.xi, cfg.eta, 1.0, &cfg.background, &cfg.gas);
    let dt = cfg.nu / cfg.sound_speed();
    let z: Symbol = std::array::from_fn(|r| std::array::from_fn(|k| m[r][k] * dt));
    let x = cfg.eigenvector().map(|a| Complex64::new(a, 0.0));
    rk3_apply(&z, &x)[3]
}

/// Update whose symbol a sweep row records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolScheme {
    Exact,
    Rb,
    RbTai,
    Semi,
}

impl SymbolScheme {
    pub const ALL: [SymbolScheme; 4] = [SymbolScheme::Exact, SymbolScheme::Rb, SymbolScheme::RbTai, SymbolScheme::Semi];

    pub fn name(self) -> &'static str {
        match self {
            SymbolScheme::Exact => "exact",
            SymbolScheme::Rb => "rb",
            SymbolScheme::RbTai => "rb-tai",
            SymbolScheme::Semi => "semi",
        }
    }
}

/// Angle sweep over every pair of `nus` and `khs`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub nus: Vec<f64>,
    pub khs: Vec<f64>,
    /// Number of equispaced angles in `[0, 2 pi)`.
    pub angles: usize,
    pub branch: i32,
    pub background: PrimitiveState<f64>,
    pub gas: GasModel<f64>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        let theta = 25f64.to_radians();
        Self {
            nus: vec![0.25, 0.5],
            khs: vec![0.25, 0.5, 0.75, 1.0],
            angles: 72,
            branch: 1,
            background: PrimitiveState::new(1.0, 0.4 * theta.cos(), 0.4 * theta.sin(), 1.0),
            gas: GasModel::air(),
        }
    }
}

/// Convected pressure gain of one scheme and its distance to the exact one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub scheme: SymbolScheme,
    pub nu: f64,
    pub kh: f64,
    pub theta: f64,
    pub gain: Complex64,
    pub error: f64,
}

pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    if spec.angles == 0 {
        return Err(Error::InvalidParameter("sweep needs at least one angle".into()));
    }
    let mut grid = Vec::new();
    for &nu in &spec.nus {
        for &kh in &spec.khs {
            for m in 0..spec.angles {
                grid.push((nu, kh, 2.0 * PI * m as f64 / spec.angles as f64));
            }
        }
    }
    let blocks = grid
        .par_iter()
        .map(|&(nu, kh, theta)| {
            let cfg = WaveConfig::polar(kh, theta, nu, spec.branch, spec.background, spec.gas)?;
            let g = gains(&cfg)?;
            let semi = semidiscrete_pressure_gain(&cfg);
            Ok(SymbolScheme::ALL.map(|scheme| {
                let gain = match scheme {
                    SymbolScheme::Exact => g.exact,
                    SymbolScheme::Rb => g.full,
                    SymbolScheme::RbTai => g.transported,
                    SymbolScheme::Semi => semi,
                };
                SweepRow { scheme, nu, kh, theta, gain, error: (gain - g.exact).norm() }
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(blocks.into_iter().flatten().collect())
}

pub const SWEEP_HEADER: &str = "scheme,nu,kh,theta,re_g,im_g,abs_g,error";

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}",
            r.scheme.name(),
            r.nu,
            r.kh,
            r.theta,
            r.gain.re,
            r.gain.im,
            r.gain.norm(),
            r.error
        );
    }
    out
}
