//! Periodic Cartesian mesh, degree-of-freedom storage and the cellwise
//! biquadratic reconstruction.
//!
//! Node arrays are indexed `[a][b]` with `a` running along x and `b` along
//! y; index 0 sits at local coordinate -1, index 1 at 0 and index 2 at +1.

use rayon::prelude::*;

use crate::error::{Error, Location, Result};
use crate::euler::{ConservativeState, GasModel, PrimitiveState};
use crate::scalar::Real;

/// Uniform periodic mesh with `nx * ny` square cells of side `h`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mesh<T> {
    pub nx: usize,
    pub ny: usize,
    pub x0: T,
    pub y0: T,
    pub lx: T,
    pub ly: T,
    pub h: T,
}

/// Cell index plus local coordinates `(xi, eta)` in `[-1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalCoord<T> {
    pub i: usize,
    pub j: usize,
    pub xi: T,
    pub eta: T,
}

impl<T: Real> Mesh<T> {
    pub fn new(nx: usize, ny: usize, origin: [T; 2], extent: [T; 2]) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidParameter("mesh needs at least one cell per direction".into()));
        }
        let [lx, ly] = extent;
        if !(lx > T::zero() && ly > T::zero()) {
            return Err(Error::InvalidParameter("domain extents must be positive".into()));
        }
        let hx = lx / T::lit(nx as f64);
        let hy = ly / T::lit(ny as f64);
        if (hx - hy).abs() > T::lit(64.0) * T::epsilon() * hx {
            return Err(Error::InvalidParameter(format!("unequal spacing: dx = {hx}, dy = {hy}")));
        }
        Ok(Self { nx, ny, x0: origin[0], y0: origin[1], lx, ly, h: hx })
    }

    /// `n x n` cells on the square `[x0, x0 + l] x [y0, y0 + l]`.
    pub fn square(n: usize, origin: [T; 2], length: T) -> Result<Self> {
        Self::new(n, n, origin, [length, length])
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    #[inline(always)]
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline(always)]
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    #[inline(always)]
    pub fn ij(&self, idx: usize) -> (usize, usize) {
        (idx % self.nx, idx / self.nx)
    }

    #[inline(always)]
    pub fn east(&self, i: usize) -> usize {
        if i + 1 == self.nx { 0 } else { i + 1 }
    }

    #[inline(always)]
    pub fn west(&self, i: usize) -> usize {
        if i == 0 { self.nx - 1 } else { i - 1 }
    }

    #[inline(always)]
    pub fn north(&self, j: usize) -> usize {
        if j + 1 == self.ny { 0 } else { j + 1 }
    }

    #[inline(always)]
    pub fn south(&self, j: usize) -> usize {
        if j == 0 { self.ny - 1 } else { j - 1 }
    }

    pub fn cell_area(&self) -> T {
        self.h * self.h
    }

    pub fn domain_area(&self) -> T {
        self.lx * self.ly
    }

    pub fn vertex(&self, i: usize, j: usize) -> [T; 2] {
        [self.x0 + T::lit(i as f64) * self.h, self.y0 + T::lit(j as f64) * self.h]
    }

    /// Midpoint of the vertical edge at `x_i` between `y_j` and `y_{j+1}`.
    pub fn vertical_edge(&self, i: usize, j: usize) -> [T; 2] {
        let half = T::lit(0.5);
        [self.x0 + T::lit(i as f64) * self.h, self.y0 + (T::lit(j as f64) + half) * self.h]
    }

    /// Midpoint of the horizontal edge at `y_j` between `x_i` and `x_{i+1}`.
    pub fn horizontal_edge(&self, i: usize, j: usize) -> [T; 2] {
        let half = T::lit(0.5);
        [self.x0 + (T::lit(i as f64) + half) * self.h, self.y0 + T::lit(j as f64) * self.h]
    }

    pub fn cell_center(&self, i: usize, j: usize) -> [T; 2] {
        let half = T::lit(0.5);
        [
            self.x0 + (T::lit(i as f64) + half) * self.h,
            self.y0 + (T::lit(j as f64) + half) * self.h,
        ]
    }

    /// Maps a point to its cell after periodic wrapping. Cells are half-open,
    /// so a point on an interface belongs to the cell on its right (above).
    pub fn locate(&self, x: T, y: T) -> Result<LocalCoord<T>> {
        if !(x.is_finite() && y.is_finite()) {
            return Err(Error::NonFiniteCoordinate { x: x.as_f64(), y: y.as_f64() });
        }
        let (i, xi) = wrap_axis((x - self.x0) / self.h, self.nx);
        let (j, eta) = wrap_axis((y - self.y0) / self.h, self.ny);
        Ok(LocalCoord { i, j, xi, eta })
    }
}

#[inline(always)]
fn wrap_axis<T: Real>(s: T, n: usize) -> (usize, T) {
    let nf = T::lit(n as f64);
    let mut s = s - (s / nf).floor() * nf;
    if s >= nf {
        s -= nf;
    }
    if s < T::zero() {
        s = T::zero();
    }
    let mut i = s.floor().to_usize().unwrap_or(0);
    if i >= n {
        i = n - 1;
    }
    let two = T::lit(2.0);
    (i, two * (s - T::lit(i as f64)) - T::one())
}

/// Four arrays, one per state component, indexed like the mesh.
#[derive(Clone, Debug, PartialEq)]
pub struct PrimitiveArray<T> {
    pub rho: Vec<T>,
    pub u: Vec<T>,
    pub v: Vec<T>,
    pub p: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConservativeArray<T> {
    pub rho: Vec<T>,
    pub mx: Vec<T>,
    pub my: Vec<T>,
    pub e: Vec<T>,
}

impl<T: Real> PrimitiveArray<T> {
    pub fn filled(n: usize, w: PrimitiveState<T>) -> Self {
        Self { rho: vec![w.rho; n], u: vec![w.u; n], v: vec![w.v; n], p: vec![w.p; n] }
    }

    pub fn from_states(states: &[PrimitiveState<T>]) -> Self {
        Self {
            rho: states.iter().map(|w| w.rho).collect(),
            u: states.iter().map(|w| w.u).collect(),
            v: states.iter().map(|w| w.v).collect(),
            p: states.iter().map(|w| w.p).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }

    #[inline(always)]
    pub fn get(&self, k: usize) -> PrimitiveState<T> {
        PrimitiveState { rho: self.rho[k], u: self.u[k], v: self.v[k], p: self.p[k] }
    }

    #[inline(always)]
    pub fn set(&mut self, k: usize, w: PrimitiveState<T>) {
        self.rho[k] = w.rho;
        self.u[k] = w.u;
        self.v[k] = w.v;
        self.p[k] = w.p;
    }

    pub fn components(&self) -> [&[T]; 4] {
        [&self.rho, &self.u, &self.v, &self.p]
    }

    pub fn components_mut(&mut self) -> [&mut Vec<T>; 4] {
        [&mut self.rho, &mut self.u, &mut self.v, &mut self.p]
    }
}

impl<T: Real> ConservativeArray<T> {
    pub fn filled(n: usize, c: ConservativeState<T>) -> Self {
        Self { rho: vec![c.rho; n], mx: vec![c.mx; n], my: vec![c.my; n], e: vec![c.e; n] }
    }

    pub fn from_states(states: &[ConservativeState<T>]) -> Self {
        Self {
            rho: states.iter().map(|c| c.rho).collect(),
            mx: states.iter().map(|c| c.mx).collect(),
            my: states.iter().map(|c| c.my).collect(),
            e: states.iter().map(|c| c.e).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }

    #[inline(always)]
    pub fn get(&self, k: usize) -> ConservativeState<T> {
        ConservativeState { rho: self.rho[k], mx: self.mx[k], my: self.my[k], e: self.e[k] }
    }

    #[inline(always)]
    pub fn set(&mut self, k: usize, c: ConservativeState<T>) {
        self.rho[k] = c.rho;
        self.mx[k] = c.mx;
        self.my[k] = c.my;
        self.e[k] = c.e;
    }

    pub fn components(&self) -> [&[T]; 4] {
        [&self.rho, &self.mx, &self.my, &self.e]
    }

    pub fn components_mut(&mut self) -> [&mut Vec<T>; 4] {
        [&mut self.rho, &mut self.mx, &mut self.my, &mut self.e]
    }
}

/// All unknowns of the scheme: conservative cell averages and primitive
/// point values at vertices and edge midpoints. Vertex `(i, j)` sits at
/// `(x_i, y_j)`, vertical edge `(i, j)` at `(x_i, y_{j+1/2})` and
/// horizontal edge `(i, j)` at `(x_{i+1/2}, y_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DofField<T> {
    pub mesh: Mesh<T>,
    pub avg: ConservativeArray<T>,
    pub vert: PrimitiveArray<T>,
    pub evert: PrimitiveArray<T>,
    pub ehorz: PrimitiveArray<T>,
}

/// Point-value families of a [`DofField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeFamily {
    Vertex,
    VerticalEdge,
    HorizontalEdge,
}

impl NodeFamily {
    pub const ALL: [NodeFamily; 3] = [NodeFamily::Vertex, NodeFamily::VerticalEdge, NodeFamily::HorizontalEdge];

    pub fn location(self, i: usize, j: usize) -> Location {
        match self {
            NodeFamily::Vertex => Location::Vertex { i, j },
            NodeFamily::VerticalEdge => Location::VerticalEdge { i, j },
            NodeFamily::HorizontalEdge => Location::HorizontalEdge { i, j },
        }
    }

    pub fn position<T: Real>(self, mesh: &Mesh<T>, i: usize, j: usize) -> [T; 2] {
        match self {
            NodeFamily::Vertex => mesh.vertex(i, j),
            NodeFamily::VerticalEdge => mesh.vertical_edge(i, j),
            NodeFamily::HorizontalEdge => mesh.horizontal_edge(i, j),
        }
    }
}

impl<T: Real> DofField<T> {
    pub fn uniform(mesh: Mesh<T>, gas: &GasModel<T>, w: PrimitiveState<T>) -> Result<Self> {
        let n = mesh.len();
        let c = gas.prim_to_cons(w)?;
        Ok(Self {
            mesh,
            avg: ConservativeArray::filled(n, c),
            vert: PrimitiveArray::filled(n, w),
            evert: PrimitiveArray::filled(n, w),
            ehorz: PrimitiveArray::filled(n, w),
        })
    }

    pub fn points(&self, family: NodeFamily) -> &PrimitiveArray<T> {
        match family {
            NodeFamily::Vertex => &self.vert,
            NodeFamily::VerticalEdge => &self.evert,
            NodeFamily::HorizontalEdge => &self.ehorz,
        }
    }

    pub fn points_mut(&mut self, family: NodeFamily) -> &mut PrimitiveArray<T> {
        match family {
            NodeFamily::Vertex => &mut self.vert,
            NodeFamily::VerticalEdge => &mut self.evert,
            NodeFamily::HorizontalEdge => &mut self.ehorz,
        }
    }

    /// Every stored scalar, in a fixed order.
    pub fn components(&self) -> [&[T]; 16] {
        let [a0, a1, a2, a3] = self.avg.components();
        let [b0, b1, b2, b3] = self.vert.components();
        let [c0, c1, c2, c3] = self.evert.components();
        let [d0, d1, d2, d3] = self.ehorz.components();
        [a0, a1, a2, a3, b0, b1, b2, b3, c0, c1, c2, c3, d0, d1, d2, d3]
    }

    pub fn components_mut(&mut self) -> [&mut Vec<T>; 16] {
        let [a0, a1, a2, a3] = self.avg.components_mut();
        let [b0, b1, b2, b3] = self.vert.components_mut();
        let [c0, c1, c2, c3] = self.evert.components_mut();
        let [d0, d1, d2, d3] = self.ehorz.components_mut();
        [a0, a1, a2, a3, b0, b1, b2, b3, c0, c1, c2, c3, d0, d1, d2, d3]
    }

    /// `self = a * self + b * other`, componentwise over every unknown.
    pub fn axpby(&mut self, a: T, other: &Self, b: T) {
        for (dst, src) in self.components_mut().into_iter().zip(other.components()) {
            dst.par_iter_mut().zip(src.par_iter()).for_each(|(d, &s)| *d = a * *d + b * s);
        }
    }

    /// Checks every point value and cell average for physical admissibility.
    pub fn validate(&self, gas: &GasModel<T>) -> Result<()> {
        let mesh = &self.mesh;
        for family in NodeFamily::ALL {
            let pts = self.points(family);
            for k in 0..mesh.len() {
                let w = pts.get(k);
                if !w.is_physical() {
                    let (i, j) = mesh.ij(k);
                    return Err(Error::InvalidState {
                        location: family.location(i, j),
                        rho: w.rho.as_f64(),
                        p: w.p.as_f64(),
                    });
                }
            }
        }
        for k in 0..mesh.len() {
            let (i, j) = mesh.ij(k);
            gas.cons_to_prim(self.avg.get(k)).map_err(|e| e.at(Location::Cell { i, j }))?;
        }
        Ok(())
    }

    /// Boundary nodes of cell `(i, j)`; the center slot is left at zero.
    #[inline(always)]
    pub fn boundary_nodes(&self, i: usize, j: usize) -> [[PrimitiveState<T>; 3]; 3] {
        gather_boundary(&self.mesh, i, j, |k| self.vert.get(k), |k| self.evert.get(k), |k| self.ehorz.get(k))
    }
}

/// Collects the eight boundary nodes of cell `(i, j)` from the shared
/// vertex and edge arrays.
#[inline(always)]
pub fn gather_boundary<T: Real, S: Copy + Default>(
    mesh: &Mesh<T>,
    i: usize,
    j: usize,
    vert: impl Fn(usize) -> S,
    evert: impl Fn(usize) -> S,
    ehorz: impl Fn(usize) -> S,
) -> [[S; 3]; 3] {
    let ip = mesh.east(i);
    let jp = mesh.north(j);
    let k00 = mesh.index(i, j);
    let k10 = mesh.index(ip, j);
    let k01 = mesh.index(i, jp);
    let k11 = mesh.index(ip, jp);
    [
        [vert(k00), evert(k00), vert(k01)],
        [ehorz(k00), S::default(), ehorz(k01)],
        [vert(k10), evert(k10), vert(k11)],
    ]
}

/// One-dimensional quadratic Lagrange basis on the nodes `-1, 0, 1`.
#[inline(always)]
pub fn lagrange_weights<T: Real>(s: T) -> [T; 3] {
    let half = T::lit(0.5);
    [half * s * (s - T::one()), T::one() - s * s, half * s * (s + T::one())]
}

/// Derivatives of [`lagrange_weights`] with respect to the local coordinate.
#[inline(always)]
pub fn lagrange_derivatives<T: Real>(s: T) -> [T; 3] {
    let half = T::lit(0.5);
    [s - half, -T::lit(2.0) * s, s + half]
}

/// Tensor-product sum `sum_ab wx[a] wy[b] nodes[a][b]`.
#[inline(always)]
pub fn tensor_combine<T: Real>(nodes: &[[PrimitiveState<T>; 3]; 3], wx: [T; 3], wy: [T; 3]) -> PrimitiveState<T> {
    let mut acc = PrimitiveState::zero();
    for a in 0..3 {
        let col = nodes[a][0] * wy[0] + nodes[a][1] * wy[1] + nodes[a][2] * wy[2];
        acc += col * wx[a];
    }
    acc
}

/// The nine primitive nodal values of one cell.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CellNodes<T> {
    pub w: [[PrimitiveState<T>; 3]; 3],
}

impl<T: Real> CellNodes<T> {
    #[inline(always)]
    pub fn center(&self) -> PrimitiveState<T> {
        self.w[1][1]
    }

    /// Biquadratic interpolant at local coordinates `(xi, eta)`.
    #[inline(always)]
    pub fn eval(&self, xi: T, eta: T) -> PrimitiveState<T> {
        tensor_combine(&self.w, lagrange_weights(xi), lagrange_weights(eta))
    }

    /// Physical gradient `(d/dx, d/dy)` of the interpolant for cell size `h`.
    pub fn gradient(&self, xi: T, eta: T, h: T) -> (PrimitiveState<T>, PrimitiveState<T>) {
        let scale = T::lit(2.0) / h;
        let lx = lagrange_weights(xi);
        let ly = lagrange_weights(eta);
        let dx = tensor_combine(&self.w, lagrange_derivatives(xi), ly) * scale;
        let dy = tensor_combine(&self.w, lx, lagrange_derivatives(eta)) * scale;
        (dx, dy)
    }
}

const SIMPSON: [f64; 3] = [1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0];

/// Tensor-product Simpson average of nine nodal values.
pub fn simpson_average<T: Real>(nodes: &[[ConservativeState<T>; 3]; 3]) -> ConservativeState<T> {
    let mut acc = ConservativeState::zero();
    for a in 0..3 {
        for b in 0..3 {
            acc += nodes[a][b] * T::lit(SIMPSON[a] * SIMPSON[b]);
        }
    }
    acc
}

/// Solves the Simpson average for the center node given the cell average
/// and the eight boundary nodes. The center entry of `nodes` is ignored.
pub fn invert_simpson_center<T: Real>(
    avg: ConservativeState<T>,
    nodes: &[[ConservativeState<T>; 3]; 3],
) -> ConservativeState<T> {
    let corners = nodes[0][0] + nodes[2][0] + nodes[0][2] + nodes[2][2];
    let edges = nodes[1][0] + nodes[1][2] + nodes[0][1] + nodes[2][1];
    (avg - corners * T::lit(1.0 / 36.0) - edges * T::lit(1.0 / 9.0)) * T::lit(9.0 / 4.0)
}

/// Builds the nodal array of cell `(i, j)`, recovering the center node from
/// the cell average.
pub fn build_cell_nodes<T: Real>(field: &DofField<T>, gas: &GasModel<T>, i: usize, j: usize) -> Result<CellNodes<T>> {
    let mut w = field.boundary_nodes(i, j);
    let mut cons = [[ConservativeState::zero(); 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            if (a, b) != (1, 1) {
                cons[a][b] = gas.prim_to_cons_unchecked(w[a][b]);
            }
        }
    }
    let avg = field.avg.get(field.mesh.index(i, j));
    let center = invert_simpson_center(avg, &cons);
    w[1][1] = gas.cons_to_prim(center).map_err(|e| e.at(Location::Center { i, j }))?;
    Ok(CellNodes { w })
}

/// Snapshot of the piecewise biquadratic reconstruction of a field, with the
/// Simpson-inverted center nodes cached.
#[derive(Clone, Debug)]
pub struct Reconstruction<T> {
    pub mesh: Mesh<T>,
    pub cells: Vec<CellNodes<T>>,
}

impl<T: Real> Reconstruction<T> {
    pub fn new(field: &DofField<T>, gas: &GasModel<T>) -> Result<Self> {
        let mesh = field.mesh;
        let cells = (0..mesh.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                build_cell_nodes(field, gas, i, j)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { mesh, cells })
    }

    #[inline(always)]
    pub fn cell(&self, i: usize, j: usize) -> &CellNodes<T> {
        &self.cells[self.mesh.index(i, j)]
    }

    #[inline(always)]
    pub fn eval_local(&self, at: &LocalCoord<T>) -> PrimitiveState<T> {
        self.cell(at.i, at.j).eval(at.xi, at.eta)
    }

    /// Value of the reconstruction at an arbitrary point (periodic).
    #[inline]
    pub fn eval(&self, x: T, y: T) -> Result<PrimitiveState<T>> {
        Ok(self.eval_local(&self.mesh.locate(x, y)?))
    }
}

/// One-off evaluation of the reconstruction at `(x, y)`.
pub fn eval_global<T: Real>(field: &DofField<T>, gas: &GasModel<T>, x: T, y: T) -> Result<PrimitiveState<T>> {
    let at = field.mesh.locate(x, y)?;
    Ok(build_cell_nodes(field, gas, at.i, at.j)?.eval(at.xi, at.eta))
}
