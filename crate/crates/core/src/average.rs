//! Conservative cell-average update with space-time Simpson fluxes and the
//! full time step of the fully discrete schemes.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::acoustic::{CflGuard, NU_LIMIT};
use crate::error::{Error, Location, Result};
use crate::euler::{ConservativeState, GasModel, PrimitiveState};
use crate::grid::{ConservativeArray, DofField, Mesh, PrimitiveArray, Reconstruction};
use crate::point_update::{evolve_points, PointValues, Scheme};
use crate::scalar::{pairwise_sum, Real};
use crate::semidiscrete;

const SIMPSON: [f64; 3] = [1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0];

/// An edge of the mesh. Vertical edge `(i, j)` runs from vertex `(i, j)` to
/// `(i, j + 1)`; horizontal edge `(i, j)` from `(i, j)` to `(i + 1, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    Vertical { i: usize, j: usize },
    Horizontal { i: usize, j: usize },
}

/// Simpson edge fluxes: x-fluxes through vertical edges and y-fluxes
/// through horizontal edges, indexed like the edge nodes.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeFluxSet<T> {
    pub vertical: ConservativeArray<T>,
    pub horizontal: ConservativeArray<T>,
}

impl<T: Real> PointValues<T> {
    /// Copies the point arrays of a field.
    pub fn from_field(field: &DofField<T>) -> Self {
        Self { vert: field.vert.clone(), evert: field.evert.clone(), ehorz: field.ehorz.clone() }
    }
}

fn physical<T: Real>(w: PrimitiveState<T>, location: Location) -> Result<PrimitiveState<T>> {
    if w.is_physical() {
        Ok(w)
    } else {
        Err(Error::InvalidState { location, rho: w.rho.as_f64(), p: w.p.as_f64() })
    }
}

/// Simpson quadrature of the flux along one edge.
pub fn spatial_edge_flux<T: Real>(mesh: &Mesh<T>, points: &PointValues<T>, gas: &GasModel<T>, edge: Edge) -> Result<ConservativeState<T>> {
    let w = T::lit;
    match edge {
        Edge::Vertical { i, j } => {
            let jn = mesh.north(j);
            let a = physical(points.vert.get(mesh.index(i, j)), Location::Vertex { i, j })?;
            let m = physical(points.evert.get(mesh.index(i, j)), Location::VerticalEdge { i, j })?;
            let b = physical(points.vert.get(mesh.index(i, jn)), Location::Vertex { i, j: jn })?;
            Ok(gas.flux_x(&a) * w(SIMPSON[0]) + gas.flux_x(&m) * w(SIMPSON[1]) + gas.flux_x(&b) * w(SIMPSON[2]))
        }
        Edge::Horizontal { i, j } => {
            let ie = mesh.east(i);
            let a = physical(points.vert.get(mesh.index(i, j)), Location::Vertex { i, j })?;
            let m = physical(points.ehorz.get(mesh.index(i, j)), Location::HorizontalEdge { i, j })?;
            let b = physical(points.vert.get(mesh.index(ie, j)), Location::Vertex { i: ie, j })?;
            Ok(gas.flux_y(&a) * w(SIMPSON[0]) + gas.flux_y(&m) * w(SIMPSON[1]) + gas.flux_y(&b) * w(SIMPSON[2]))
        }
    }
}

/// Simpson fluxes through every edge at one time level.
pub fn edge_fluxes<T: Real>(mesh: &Mesh<T>, points: &PointValues<T>, gas: &GasModel<T>) -> Result<EdgeFluxSet<T>> {
    let n = mesh.len();
    let (fv, gv): (Vec<_>, Vec<_>) = (0..n)
        .into_par_iter()
        .map(|k| {
            let w = physical(points.vert.get(k), {
                let (i, j) = mesh.ij(k);
                Location::Vertex { i, j }
            })?;
            Ok((gas.flux_x(&w), gas.flux_y(&w)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let mid = |arr: &PrimitiveArray<T>, vertical: bool| -> Result<Vec<ConservativeState<T>>> {
        (0..n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                if vertical {
                    Ok(gas.flux_x(&physical(arr.get(k), Location::VerticalEdge { i, j })?))
                } else {
                    Ok(gas.flux_y(&physical(arr.get(k), Location::HorizontalEdge { i, j })?))
                }
            })
            .collect()
    };
    let fe = mid(&points.evert, true)?;
    let ge = mid(&points.ehorz, false)?;
    let (a, b, c) = (T::lit(SIMPSON[0]), T::lit(SIMPSON[1]), T::lit(SIMPSON[2]));
    let vertical: Vec<_> = (0..n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = mesh.ij(k);
            fv[k] * a + fe[k] * b + fv[mesh.index(i, mesh.north(j))] * c
        })
        .collect();
    let horizontal: Vec<_> = (0..n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = mesh.ij(k);
            gv[k] * a + ge[k] * b + gv[mesh.index(mesh.east(i), j)] * c
        })
        .collect();
    Ok(EdgeFluxSet { vertical: ConservativeArray::from_states(&vertical), horizontal: ConservativeArray::from_states(&horizontal) })
}

fn simpson_combine<T: Real>(f0: &ConservativeArray<T>, fh: &ConservativeArray<T>, f1: &ConservativeArray<T>) -> ConservativeArray<T> {
    let (a, b, c) = (T::lit(SIMPSON[0]), T::lit(SIMPSON[1]), T::lit(SIMPSON[2]));
    let states: Vec<_> = (0..f0.len()).map(|k| f0.get(k) * a + fh.get(k) * b + f1.get(k) * c).collect();
    ConservativeArray::from_states(&states)
}

/// Simpson rule in time over the levels `t^n`, `t^{n+1/2}`, `t^{n+1}`.
pub fn time_averaged_flux<T: Real>(f0: &EdgeFluxSet<T>, f_half: &EdgeFluxSet<T>, f1: &EdgeFluxSet<T>) -> EdgeFluxSet<T> {
    EdgeFluxSet {
        vertical: simpson_combine(&f0.vertical, &f_half.vertical, &f1.vertical),
        horizontal: simpson_combine(&f0.horizontal, &f_half.horizontal, &f1.horizontal),
    }
}

/// Flux divergence `(F_{i+1,j} - F_{i,j} + G_{i,j+1} - G_{i,j}) / h` per cell.
pub fn flux_divergence<T: Real>(mesh: &Mesh<T>, fluxes: &EdgeFluxSet<T>) -> Vec<ConservativeState<T>> {
    let inv_h = mesh.h.recip();
    (0..mesh.len())
        .into_par_iter()
        .map(|k| {
            let (i, j) = mesh.ij(k);
            let east = fluxes.vertical.get(mesh.index(mesh.east(i), j));
            let north = fluxes.horizontal.get(mesh.index(i, mesh.north(j)));
            ((east - fluxes.vertical.get(k)) + (north - fluxes.horizontal.get(k))) * inv_h
        })
        .collect()
}

/// Conservative update of the cell averages with time-averaged fluxes.
pub fn update_averages<T: Real>(
    mesh: &Mesh<T>,
    gas: &GasModel<T>,
    avg: &ConservativeArray<T>,
    fluxes: &EdgeFluxSet<T>,
    dt: T,
) -> Result<ConservativeArray<T>> {
    let div = flux_divergence(mesh, fluxes);
    let states = (0..mesh.len())
        .into_par_iter()
        .map(|k| {
            let u = avg.get(k) - div[k] * dt;
            let (i, j) = mesh.ij(k);
            gas.cons_to_prim(u).map_err(|e| e.at(Location::Cell { i, j }))?;
            Ok(u)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConservativeArray::from_states(&states))
}

/// Per-component domain sums `sum_k U_k` in a fixed pairwise order.
pub fn conserved_totals<T: Real>(avg: &ConservativeArray<T>) -> [T; 4] {
    let c = avg.components();
    [pairwise_sum(c[0]), pairwise_sum(c[1]), pairwise_sum(c[2]), pairwise_sum(c[3])]
}

fn abs_totals<T: Real>(avg: &ConservativeArray<T>) -> [T; 4] {
    let c = avg.components();
    let abs = |s: &[T]| pairwise_sum(&s.iter().map(|x| x.abs()).collect::<Vec<_>>());
    [abs(c[0]), abs(c[1]), abs(c[2]), abs(c[3])]
}

/// Relative change of each domain total between two sets of averages. The
/// scale is the larger of the absolute sums, so that components with
/// vanishing totals (momentum at rest) are still measured meaningfully.
pub fn conservation_residuals<T: Real>(before: &ConservativeArray<T>, after: &ConservativeArray<T>) -> [f64; 4] {
    let (t0, t1) = (conserved_totals(before), conserved_totals(after));
    let (a0, a1) = (abs_totals(before), abs_totals(after));
    std::array::from_fn(|m| {
        let diff = (t1[m] - t0[m]).abs().as_f64();
        let scale = a0[m].max(a1[m]).as_f64();
        if diff == 0.0 {
            0.0
        } else if scale > 0.0 {
            diff / scale
        } else {
            f64::INFINITY
        }
    })
}

/// Largest acoustic CFL `c dt / h` and total CFL `(|u| + c) dt / h` over
/// all nine nodes of every cell.
pub fn cfl_numbers<T: Real>(rec: &Reconstruction<T>, gas: &GasModel<T>, dt: T) -> (f64, f64) {
    let (c, s) = max_speeds(rec, gas);
    let scale = (dt / rec.mesh.h).as_f64();
    (c * scale, s * scale)
}

fn max_speeds<T: Real>(rec: &Reconstruction<T>, gas: &GasModel<T>) -> (f64, f64) {
    rec.cells
        .par_iter()
        .map(|cell| {
            let mut m = (0.0f64, 0.0f64);
            for w in cell.w.iter().flatten() {
                let c = gas.sound_speed(w).as_f64();
                m.0 = m.0.max(c);
                m.1 = m.1.max(c + w.speed().as_f64());
            }
            m
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)))
}

/// Time step for a target total CFL number.
pub fn cfl_time_step<T: Real>(field: &DofField<T>, gas: &GasModel<T>, cfl: T) -> Result<T> {
    let rec = Reconstruction::new(field, gas)?;
    let (_, s) = max_speeds(&rec, gas);
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::InvalidParameter(format!("maximum signal speed {s} is not positive")));
    }
    Ok(cfl * field.mesh.h / T::lit(s))
}

/// Tunables of a single step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepOptions {
    pub guard: CflGuard,
    /// Hard limit on the relative conservation residual.
    pub conservation_limit: f64,
}

impl Default for StepOptions {
    fn default() -> Self {
        Self { guard: CflGuard::Enforce, conservation_limit: 1e-10 }
    }
}

/// Wall-clock time spent in each phase of a step.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PhaseTimings {
    pub reconstruction: Duration,
    pub points: Duration,
    pub fluxes: Duration,
    pub averages: Duration,
}

impl PhaseTimings {
    pub fn total(&self) -> Duration {
        self.reconstruction + self.points + self.fluxes + self.averages
    }
}

/// What happened during one step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepReport {
    pub dt: f64,
    pub max_nu: f64,
    pub max_cfl: f64,
    pub timings: PhaseTimings,
    pub conservation: [f64; 4],
}

impl StepReport {
    pub fn max_residual(&self) -> f64 {
        self.conservation.iter().copied().fold(0.0, f64::max)
    }
}

pub(crate) fn check_conservation(residuals: &[f64; 4], limit: f64) -> Result<()> {
    for (component, &residual) in residuals.iter().enumerate() {
        if !(residual <= limit) {
            return Err(Error::Conservation { component, residual, limit });
        }
    }
    Ok(())
}

/// Advances the field by one step of size `dt` with the chosen scheme.
pub fn advance_step<T: Real>(
    field: &DofField<T>,
    gas: &GasModel<T>,
    scheme: Scheme,
    dt: T,
    options: &StepOptions,
) -> Result<(DofField<T>, StepReport)> {
    if !(dt >= T::zero()) || !dt.is_finite() {
        return Err(Error::InvalidParameter(format!("time step {dt} must be finite and non-negative")));
    }
    if scheme == Scheme::SemiDiscrete {
        return semidiscrete::ssprk3_step_report(field, gas, dt, options);
    }
    let mesh = field.mesh;
    let mut timings = PhaseTimings::default();

    let clock = Instant::now();
    let rec = Reconstruction::new(field, gas)?;
    let (max_nu, max_cfl) = cfl_numbers(&rec, gas, dt);
    if max_nu > NU_LIMIT && options.guard == CflGuard::Override {
        log::debug!("acoustic CFL {max_nu:.3} exceeds {NU_LIMIT}; stencils are extrapolated");
    }
    timings.reconstruction = clock.elapsed();

    let clock = Instant::now();
    let half = dt * T::lit(0.5);
    let mut levels = evolve_points(&rec, gas, field, scheme, &[half, dt], options.guard)?;
    let full = levels.pop().expect("two levels");
    let mid = levels.pop().expect("two levels");
    timings.points = clock.elapsed();

    let clock = Instant::now();
    let f0 = edge_fluxes(&mesh, &PointValues::from_field(field), gas)?;
    let fh = edge_fluxes(&mesh, &mid, gas)?;
    let f1 = edge_fluxes(&mesh, &full, gas)?;
    let fluxes = time_averaged_flux(&f0, &fh, &f1);
    timings.fluxes = clock.elapsed();

    let clock = Instant::now();
    let avg = update_averages(&mesh, gas, &field.avg, &fluxes, dt)?;
    let conservation = conservation_residuals(&field.avg, &avg);
    check_conservation(&conservation, options.conservation_limit)?;
    timings.averages = clock.elapsed();

    let mut next = DofField { mesh, avg, vert: field.vert.clone(), evert: field.evert.clone(), ehorz: field.ehorz.clone() };
    full.write_into(&mut next);
    Ok((next, StepReport { dt: dt.as_f64(), max_nu, max_cfl, timings, conservation }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::sample_field;

    fn gas() -> GasModel<f64> {
        GasModel::air()
    }

    fn mesh(n: usize) -> Mesh<f64> {
        Mesh::square(n, [0.0, 0.0], 1.0).unwrap()
    }

    fn lumpy(x: f64, y: f64) -> PrimitiveState<f64> {
        let t = std::f64::consts::TAU;
        PrimitiveState::new(
            1.0 + 0.2 * (t * x).sin() * (t * y).cos(),
            0.3 + 0.1 * (t * y).sin(),
            -0.2 + 0.1 * (t * (x + y)).cos(),
            1.0 + 0.1 * (t * (x - 2.0 * y)).sin(),
        )
    }

    #[test]
    fn rest_state_flux_is_pressure() {
        let m = mesh(4);
        let f = DofField::uniform(m, &gas(), PrimitiveState::new(1.3, 0.0, 0.0, 0.7)).unwrap();
        let pts = PointValues::from_field(&f);
        let fx = spatial_edge_flux(&m, &pts, &gas(), Edge::Vertical { i: 1, j: 3 }).unwrap();
        assert!(fx.max_abs_diff(ConservativeState::new(0.0, 0.7, 0.0, 0.0)) < 1e-15);
        let gy = spatial_edge_flux(&m, &pts, &gas(), Edge::Horizontal { i: 3, j: 0 }).unwrap();
        assert!(gy.max_abs_diff(ConservativeState::new(0.0, 0.0, 0.7, 0.0)) < 1e-15);
    }

    /// With `rho`, `v`, `u = 0` constant and `p` quadratic in `y` along the
    /// edge, the x-momentum flux is `p`, whose edge mean Simpson integrates
    /// exactly.
    #[test]
    fn simpson_edge_flux_integrates_quadratic_pressure() {
        let m = mesh(4);
        let p = |y: f64| 1.0 + 0.5 * y + 0.8 * y * y;
        let field = sample_field(m, &gas(), &|_x: f64, y: f64| PrimitiveState::new(1.0, 0.0, 0.0, p(y))).unwrap();
        let pts = PointValues::from_field(&field);
        let fx = spatial_edge_flux(&m, &pts, &gas(), Edge::Vertical { i: 2, j: 1 }).unwrap();
        let (y0, y1) = (0.25, 0.5);
        let prim = |y: f64| y + 0.25 * y * y + 0.8 * y * y * y / 3.0;
        let exact = (prim(y1) - prim(y0)) / (y1 - y0);
        assert!((fx.mx - exact).abs() < 1e-15);
        let all = edge_fluxes(&m, &pts, &gas()).unwrap();
        assert_eq!(all.vertical.get(m.index(2, 1)), fx);
    }

    #[test]
    fn time_simpson_is_exact_for_quadratics() {
        let one = |t: f64| {
            let c = ConservativeState::new(t * t, 1.0, 2.0 * t, 3.0);
            EdgeFluxSet { vertical: ConservativeArray::from_states(&[c]), horizontal: ConservativeArray::from_states(&[c * 2.0]) }
        };
        let f = time_averaged_flux(&one(0.0), &one(0.5), &one(1.0));
        assert!(f.vertical.get(0).max_abs_diff(ConservativeState::new(1.0 / 3.0, 1.0, 1.0, 3.0)) < 1e-15);
        assert!(f.horizontal.get(0).max_abs_diff(ConservativeState::new(2.0 / 3.0, 2.0, 2.0, 6.0)) < 1e-15);
    }

    #[test]
    fn single_flux_column_moves_mass_between_two_cells() {
        let m = mesh(4);
        let g = gas();
        let base = g.prim_to_cons(PrimitiveState::new(1.0, 0.0, 0.0, 1.0)).unwrap();
        let avg = ConservativeArray::filled(16, base);
        let zero = ConservativeArray::filled(16, ConservativeState::zero());
        let mut fl = EdgeFluxSet { vertical: zero.clone(), horizontal: zero };
        fl.vertical.set(m.index(2, 1), ConservativeState::new(0.5, 0.0, 0.0, 0.0));
        let new = update_averages(&m, &g, &avg, &fl, 0.1).unwrap();
        let changed: Vec<usize> = (0..16).filter(|&k| new.get(k) != base).collect();
        assert_eq!(changed, vec![m.index(1, 1), m.index(2, 1)]);
        assert!((new.get(m.index(1, 1)).rho - 0.8).abs() < 1e-15);
        assert!((new.get(m.index(2, 1)).rho - 1.2).abs() < 1e-15);
        assert_eq!(conservation_residuals(&avg, &new), [0.0; 4]);
    }

    #[test]
    fn uniform_field_is_unchanged() {
        let w = PrimitiveState::new(1.0, 0.4, -0.3, 2.0);
        let f = DofField::uniform(mesh(8), &gas(), w).unwrap();
        for scheme in Scheme::ALL {
            let (next, report) = advance_step(&f, &gas(), scheme, 0.01, &StepOptions::default()).unwrap();
            for (a, b) in next.components().iter().zip(f.components()) {
                for (x, y) in a.iter().zip(b) {
                    assert!((x - y).abs() < 1e-14, "{scheme}");
                }
            }
            assert!(report.max_residual() < 1e-15);
        }
    }

    #[test]
    fn random_step_conserves_to_roundoff() {
        let f = sample_field(mesh(16), &gas(), &lumpy).unwrap();
        let dt = cfl_time_step(&f, &gas(), 0.45).unwrap();
        for scheme in Scheme::ALL {
            let (_, report) = advance_step(&f, &gas(), scheme, dt, &StepOptions::default()).unwrap();
            assert!(report.max_residual() < 1e-12, "{scheme}: {:?}", report.conservation);
            assert!((report.max_cfl - 0.45).abs() < 1e-12);
            assert!(report.max_nu < report.max_cfl);
        }
    }

    #[test]
    fn tiny_step_changes_field_proportionally() {
        let f = sample_field(mesh(8), &gas(), &lumpy).unwrap();
        let diffs: Vec<f64> = [1e-4, 5e-5]
            .iter()
            .map(|&dt| {
                let (next, _) = advance_step(&f, &gas(), Scheme::RbTai, dt, &StepOptions::default()).unwrap();
                next.components()
                    .iter()
                    .zip(f.components())
                    .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
                    .fold(0.0, f64::max)
            })
            .collect();
        assert!((diffs[0] / diffs[1] - 2.0).abs() < 0.01, "{diffs:?}");
        let (same, _) = advance_step(&f, &gas(), Scheme::Rb, 0.0, &StepOptions::default()).unwrap();
        assert!(same.avg.get(7).max_abs_diff(f.avg.get(7)) < 1e-15);
    }

    #[test]
    fn x_mirrored_data_give_mirrored_solution() {
        let n = 12;
        let m = mesh(n);
        let f = sample_field(m, &gas(), &lumpy).unwrap();
        let mirrored = sample_field(m, &gas(), &|x: f64, y: f64| {
            let w = lumpy(1.0 - x, y);
            PrimitiveState::new(w.rho, -w.u, w.v, w.p)
        })
        .unwrap();
        let dt = cfl_time_step(&f, &gas(), 0.4).unwrap();
        for scheme in Scheme::ALL {
            let (mut a, mut b) = (f.clone(), mirrored.clone());
            for _ in 0..3 {
                a = advance_step(&a, &gas(), scheme, dt, &StepOptions::default()).unwrap().0;
                b = advance_step(&b, &gas(), scheme, dt, &StepOptions::default()).unwrap().0;
            }
            for j in 0..n {
                for i in 0..n {
                    let flip = |w: PrimitiveState<f64>| PrimitiveState::new(w.rho, -w.u, w.v, w.p);
                    let mi = (n - i) % n;
                    let va = a.vert.get(m.index(i, j));
                    let vb = b.vert.get(m.index(mi, j));
                    assert!(va.max_abs_diff(flip(vb)) < 1e-12, "{scheme} vertex");
                    let ea = a.evert.get(m.index(i, j));
                    let eb = b.evert.get(m.index(mi, j));
                    assert!(ea.max_abs_diff(flip(eb)) < 1e-12, "{scheme} vertical edge");
                    let ha = a.ehorz.get(m.index(i, j));
                    let hb = b.ehorz.get(m.index(n - 1 - i, j));
                    assert!(ha.max_abs_diff(flip(hb)) < 1e-12, "{scheme} horizontal edge");
                    let ca = a.avg.get(m.index(i, j));
                    let cb = b.avg.get(m.index(n - 1 - i, j));
                    let cb = ConservativeState::new(cb.rho, -cb.mx, cb.my, cb.e);
                    assert!(ca.max_abs_diff(cb) < 1e-12, "{scheme} average");
                }
            }
        }
    }

    #[test]
    fn conservation_limit_is_enforced() {
        assert!(check_conservation(&[0.0, 1e-11, 0.0, 0.0], 1e-10).is_ok());
        assert!(matches!(check_conservation(&[0.0, 0.0, 2e-10, 0.0], 1e-10), Err(Error::Conservation { component: 2, .. })));
        assert!(check_conservation(&[f64::NAN, 0.0, 0.0, 0.0], 1e-10).is_err());
    }

    #[test]
    fn negative_step_is_rejected() {
        let f = DofField::uniform(mesh(4), &gas(), PrimitiveState::new(1.0, 0.0, 0.0, 1.0)).unwrap();
        assert!(advance_step(&f, &gas(), Scheme::Rb, -1.0, &StepOptions::default()).is_err());
    }
}
