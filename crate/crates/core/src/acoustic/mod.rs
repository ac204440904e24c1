//! Exact evolution of the locally frozen acoustic subsystem
//!
//! ```text
//! u_t + grad p / rho* = 0,    p_t + rho* c*^2 div u = 0
//! ```
//!
//! applied to the piecewise biquadratic reconstruction. The value at a node
//! after time `tau` is a sum of wedge contributions, one per cell touched by
//! the Mach disk of radius `c* tau`. Each wedge is a set of nodal stencils
//! whose entries are polynomials of degree at most four in the acoustic
//! CFL number `nu = c* tau / h`.

mod tables;

use crate::error::{Error, Location, Result};
use crate::euler::{GasModel, PrimitiveState};
use crate::grid::CellNodes;
use crate::scalar::Real;

/// Largest acoustic CFL number for which the Mach disk only reaches the
/// cells adjacent to a node.
pub const NU_LIMIT: f64 = 0.5;

/// Coefficient table: `[a][b][k]` multiplies `nu^k` for the node at
/// x-index `a`, y-index `b` of the cell.
pub type Coeffs = [[[f64; 5]; 3]; 3];

/// Polynomial stencils of one wedge. `uv` maps `v` data into `u` output,
/// `vu` the reverse. Pressure output reuses `up` and `vp` scaled by `Z*`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WedgeTable {
    pub uu: Coeffs,
    pub uv: Coeffs,
    pub vu: Coeffs,
    pub vv: Coeffs,
    pub up: Coeffs,
    pub vp: Coeffs,
    pub pp: Coeffs,
}

const MIRROR_X: u8 = 0;
const MIRROR_Y: u8 = 1;
const TRANSPOSE: u8 = 2;

const fn remap(c: &Coeffs, sign: f64, op: u8) -> Coeffs {
    let mut out = [[[0.0; 5]; 3]; 3];
    let mut a = 0;
    while a < 3 {
        let mut b = 0;
        while b < 3 {
            let (sa, sb) = match op {
                MIRROR_X => (2 - a, b),
                MIRROR_Y => (a, 2 - b),
                _ => (b, a),
            };
            let mut k = 0;
            while k < 5 {
                out[a][b][k] = sign * c[sa][sb][k];
                k += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

impl WedgeTable {
    /// Wedge reflected across the vertical line through the node.
    pub const fn mirror_x(&self) -> Self {
        Self {
            uu: remap(&self.uu, 1.0, MIRROR_X),
            uv: remap(&self.uv, -1.0, MIRROR_X),
            vu: remap(&self.vu, -1.0, MIRROR_X),
            vv: remap(&self.vv, 1.0, MIRROR_X),
            up: remap(&self.up, -1.0, MIRROR_X),
            vp: remap(&self.vp, 1.0, MIRROR_X),
            pp: remap(&self.pp, 1.0, MIRROR_X),
        }
    }

    /// Wedge reflected across the horizontal line through the node.
    pub const fn mirror_y(&self) -> Self {
        Self {
            uu: remap(&self.uu, 1.0, MIRROR_Y),
            uv: remap(&self.uv, -1.0, MIRROR_Y),
            vu: remap(&self.vu, -1.0, MIRROR_Y),
            vv: remap(&self.vv, 1.0, MIRROR_Y),
            up: remap(&self.up, 1.0, MIRROR_Y),
            vp: remap(&self.vp, -1.0, MIRROR_Y),
            pp: remap(&self.pp, 1.0, MIRROR_Y),
        }
    }

    /// Wedge under the exchange `x <-> y`, `u <-> v`.
    pub const fn transpose(&self) -> Self {
        Self {
            uu: remap(&self.vv, 1.0, TRANSPOSE),
            uv: remap(&self.vu, 1.0, TRANSPOSE),
            vu: remap(&self.uv, 1.0, TRANSPOSE),
            vv: remap(&self.uu, 1.0, TRANSPOSE),
            up: remap(&self.vp, 1.0, TRANSPOSE),
            vp: remap(&self.up, 1.0, TRANSPOSE),
            pp: remap(&self.pp, 1.0, TRANSPOSE),
        }
    }

    /// Stencil matrices evaluated at a given `nu`.
    pub fn at<T: Real>(&self, nu: T) -> StencilSet<T> {
        let ev = |c: &Coeffs| {
            let mut m = [[T::zero(); 3]; 3];
            for a in 0..3 {
                for b in 0..3 {
                    m[a][b] = horner(&c[a][b], nu);
                }
            }
            m
        };
        StencilSet {
            uu: ev(&self.uu),
            uv: ev(&self.uv),
            vu: ev(&self.vu),
            vv: ev(&self.vv),
            up: ev(&self.up),
            vp: ev(&self.vp),
            pp: ev(&self.pp),
        }
    }
}

#[inline(always)]
fn horner<T: Real>(c: &[f64; 5], nu: T) -> T {
    let mut acc = T::lit(c[4]);
    for k in (0..4).rev() {
        acc = acc * nu + T::lit(c[k]);
    }
    acc
}

#[inline(always)]
fn horner_t<T: Real>(c: &[T; 5], nu: T) -> T {
    (((c[4] * nu + c[3]) * nu + c[2]) * nu + c[1]) * nu + c[0]
}

/// Stencil matrices at a fixed `nu`, indexed `[a][b]` like the cell nodes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StencilSet<T> {
    pub uu: [[T; 3]; 3],
    pub uv: [[T; 3]; 3],
    pub vu: [[T; 3]; 3],
    pub vv: [[T; 3]; 3],
    pub up: [[T; 3]; 3],
    pub vp: [[T; 3]; 3],
    pub pp: [[T; 3]; 3],
}

/// Half plane `x > x_P` at a vertical-edge node; the node is `[0][1]`.
pub static RIGHT_HALF: WedgeTable = tables::RIGHT_HALF;
/// Half plane `x < x_P` at a vertical-edge node; the node is `[2][1]`.
pub static LEFT_HALF: WedgeTable = tables::LEFT_HALF;
/// Half plane `y > y_P` at a horizontal-edge node; the node is `[1][0]`.
pub static TOP_HALF: WedgeTable = tables::RIGHT_HALF.transpose();
/// Half plane `y < y_P` at a horizontal-edge node; the node is `[1][2]`.
pub static BOTTOM_HALF: WedgeTable = tables::LEFT_HALF.transpose();
/// Quadrant `x > x_P, y > y_P` at a vertex; the node is `[0][0]`.
pub static NORTH_EAST: WedgeTable = tables::NE_QUADRANT;
pub static NORTH_WEST: WedgeTable = tables::NE_QUADRANT.mirror_x();
pub static SOUTH_EAST: WedgeTable = tables::NE_QUADRANT.mirror_y();
pub static SOUTH_WEST: WedgeTable = tables::NE_QUADRANT.mirror_x().mirror_y();
/// Whole disk around a cell center; the node is `[1][1]`.
pub static FULL_DISK: WedgeTable = tables::FULL_DISK;

/// Right and left vertical-edge stencils at `nu`.
pub fn stencils_vertical_edge<T: Real>(nu: T) -> Result<(StencilSet<T>, StencilSet<T>)> {
    check_nu(nu, Location::Unknown)?;
    Ok((RIGHT_HALF.at(nu), LEFT_HALF.at(nu)))
}

/// Whether an acoustic CFL number above [`NU_LIMIT`] is an error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CflGuard {
    #[default]
    Enforce,
    /// Evaluate the stencil polynomials beyond their geometric validity.
    Override,
}

fn check_nu<T: Real>(nu: T, location: Location) -> Result<()> {
    if nu >= T::zero() && nu <= T::lit(NU_LIMIT) {
        Ok(())
    } else {
        Err(Error::CflViolation { nu: nu.as_f64(), limit: NU_LIMIT, location })
    }
}

/// Linearization state at a target node: the node's own value, its sound
/// speed and impedance, and the acoustic CFL number of the step.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrozenAcoustics<T> {
    pub state: PrimitiveState<T>,
    pub c: T,
    pub z: T,
    pub nu: T,
}

impl<T: Real> FrozenAcoustics<T> {
    pub fn new(gas: &GasModel<T>, state: PrimitiveState<T>, tau: T, h: T) -> Self {
        let c = gas.sound_speed(&state);
        Self { state, c, z: state.rho * c, nu: c * tau / h }
    }

    pub fn check(&self, guard: CflGuard, location: Location) -> Result<()> {
        match guard {
            CflGuard::Enforce => check_nu(self.nu, location),
            CflGuard::Override if self.nu >= T::zero() => Ok(()),
            CflGuard::Override => check_nu(self.nu, location),
        }
    }

    pub fn with_nu(self, nu: T) -> Self {
        Self { nu, ..self }
    }
}

/// Contraction of nodal data with the wedge stencils, kept as coefficients
/// of `nu^k` so that one contraction serves every time step size.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AcousticMoments<T> {
    pub u: [T; 5],
    pub v: [T; 5],
    pub p: [T; 5],
}

impl<T: Real> AcousticMoments<T> {
    /// Adds one wedge. Data enter as deviations from the frozen state.
    #[inline(always)]
    pub fn accumulate(&mut self, table: &WedgeTable, nodes: &CellNodes<T>, base: &PrimitiveState<T>, z: T) {
        let inv_z = z.recip();
        for a in 0..3 {
            for b in 0..3 {
                let w = nodes.w[a][b];
                let du = w.u - base.u;
                let dv = w.v - base.v;
                let dp = w.p - base.p;
                let dpz = dp * inv_z;
                let duz = du * z;
                let dvz = dv * z;
                for k in 0..5 {
                    let up = T::lit(table.up[a][b][k]);
                    let vp = T::lit(table.vp[a][b][k]);
                    self.u[k] += T::lit(table.uu[a][b][k]) * du + T::lit(table.uv[a][b][k]) * dv + up * dpz;
                    self.v[k] += T::lit(table.vu[a][b][k]) * du + T::lit(table.vv[a][b][k]) * dv + vp * dpz;
                    self.p[k] += T::lit(table.pp[a][b][k]) * dp + up * duz + vp * dvz;
                }
            }
        }
    }

    pub fn from_wedges(wedges: &[(&WedgeTable, &CellNodes<T>)], frozen: &FrozenAcoustics<T>) -> Self {
        let mut m = Self::default();
        for (table, nodes) in wedges {
            m.accumulate(table, nodes, &frozen.state, frozen.z);
        }
        m
    }

    /// Acoustic state at the node for the given `nu`; density follows the
    /// frozen invariant `rho - p / c*^2`.
    #[inline(always)]
    pub fn evaluate(&self, frozen: &FrozenAcoustics<T>, nu: T) -> PrimitiveState<T> {
        let w = frozen.state;
        let dp = horner_t(&self.p, nu);
        PrimitiveState {
            rho: w.rho + dp / (frozen.c * frozen.c),
            u: w.u + horner_t(&self.u, nu),
            v: w.v + horner_t(&self.v, nu),
            p: w.p + dp,
        }
    }
}

/// Acoustic point value produced by the frozen operator.
pub type AcousticPointResult<T> = PrimitiveState<T>;

fn update<T: Real>(wedges: &[(&WedgeTable, &CellNodes<T>)], frozen: &FrozenAcoustics<T>) -> Result<AcousticPointResult<T>> {
    frozen.check(CflGuard::Enforce, Location::Unknown)?;
    Ok(AcousticMoments::from_wedges(wedges, frozen).evaluate(frozen, frozen.nu))
}

/// Vertical-edge node between the `left` and `right` cells.
pub fn acoustic_update_vertical_edge<T: Real>(
    left: &CellNodes<T>,
    right: &CellNodes<T>,
    frozen: &FrozenAcoustics<T>,
) -> Result<AcousticPointResult<T>> {
    update(&[(&RIGHT_HALF, right), (&LEFT_HALF, left)], frozen)
}

/// Horizontal-edge node between the `bottom` and `top` cells.
pub fn acoustic_update_horizontal_edge<T: Real>(
    bottom: &CellNodes<T>,
    top: &CellNodes<T>,
    frozen: &FrozenAcoustics<T>,
) -> Result<AcousticPointResult<T>> {
    update(&[(&TOP_HALF, top), (&BOTTOM_HALF, bottom)], frozen)
}

/// Vertex node shared by the four surrounding cells.
pub fn acoustic_update_vertex<T: Real>(
    sw: &CellNodes<T>,
    se: &CellNodes<T>,
    nw: &CellNodes<T>,
    ne: &CellNodes<T>,
    frozen: &FrozenAcoustics<T>,
) -> Result<AcousticPointResult<T>> {
    update(&[(&NORTH_EAST, ne), (&NORTH_WEST, nw), (&SOUTH_WEST, sw), (&SOUTH_EAST, se)], frozen)
}

/// Center node of a cell, frozen at the center value.
pub fn acoustic_update_center<T: Real>(cell: &CellNodes<T>, frozen: &FrozenAcoustics<T>) -> Result<AcousticPointResult<T>> {
    update(&[(&FULL_DISK, cell)], frozen)
}

/// Acoustic increment at a node. The density change is tied to the
/// pressure change through the frozen sound speed.
pub fn acoustic_increment<T: Real>(before: &PrimitiveState<T>, after: &AcousticPointResult<T>, c: T) -> PrimitiveState<T> {
    let dp = after.p - before.p;
    PrimitiveState { rho: dp / (c * c), u: after.u - before.u, v: after.v - before.v, p: dp }
}
