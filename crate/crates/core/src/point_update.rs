//! Point-value evolution: footpoint advection combined with the frozen
//! acoustic operator, either additively or by transporting the acoustic
//! increment to the convective foot.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::acoustic::{acoustic_increment, AcousticMoments, CflGuard, FrozenAcoustics, WedgeTable};
use crate::acoustic::{BOTTOM_HALF, FULL_DISK, LEFT_HALF, NORTH_EAST, NORTH_WEST, RIGHT_HALF, SOUTH_EAST, SOUTH_WEST, TOP_HALF};
use crate::error::{Error, Location, Result};
use crate::euler::{GasModel, PrimitiveState};
use crate::grid::{
    gather_boundary, lagrange_weights, tensor_combine, CellNodes, DofField, LocalCoord, Mesh, NodeFamily,
    PrimitiveArray, Reconstruction,
};
use crate::scalar::Real;

/// Time integration variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Additive acoustic/advection split.
    Rb,
    /// Acoustic increments transported to the convective foot.
    RbTai,
    /// Method of lines with SSPRK3.
    SemiDiscrete,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Rb, Scheme::RbTai, Scheme::SemiDiscrete];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Rb => "rb",
            Scheme::RbTai => "rb-tai",
            Scheme::SemiDiscrete => "semi",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rb" => Ok(Scheme::Rb),
            "rb-tai" | "rbtai" | "rb_tai" => Ok(Scheme::RbTai),
            "semi" | "semidiscrete" | "semi-discrete" => Ok(Scheme::SemiDiscrete),
            other => Err(Error::InvalidParameter(format!("unknown scheme '{other}'"))),
        }
    }
}

/// New values for the three point families.
#[derive(Clone, Debug, PartialEq)]
pub struct PointValues<T> {
    pub vert: PrimitiveArray<T>,
    pub evert: PrimitiveArray<T>,
    pub ehorz: PrimitiveArray<T>,
}

impl<T: Real> PointValues<T> {
    pub fn get(&self, family: NodeFamily) -> &PrimitiveArray<T> {
        match family {
            NodeFamily::Vertex => &self.vert,
            NodeFamily::VerticalEdge => &self.evert,
            NodeFamily::HorizontalEdge => &self.ehorz,
        }
    }

    fn set(&mut self, family: NodeFamily, values: PrimitiveArray<T>) {
        match family {
            NodeFamily::Vertex => self.vert = values,
            NodeFamily::VerticalEdge => self.evert = values,
            NodeFamily::HorizontalEdge => self.ehorz = values,
        }
    }

    /// Copies the values into the point arrays of a field.
    pub fn write_into(self, field: &mut DofField<T>) {
        field.vert = self.vert;
        field.evert = self.evert;
        field.ehorz = self.ehorz;
    }
}

/// Acoustic increments at every node of the biquadratic reconstruction,
/// stored cellwise for interpolation.
#[derive(Clone, Debug)]
pub struct IncrementField<T> {
    pub mesh: Mesh<T>,
    pub cells: Vec<[[PrimitiveState<T>; 3]; 3]>,
}

impl<T: Real> IncrementField<T> {
    /// Assembles the cellwise arrays from per-node increments.
    pub fn from_nodes(
        mesh: Mesh<T>,
        vert: &[PrimitiveState<T>],
        evert: &[PrimitiveState<T>],
        ehorz: &[PrimitiveState<T>],
        center: &[PrimitiveState<T>],
    ) -> Self {
        let cells = (0..mesh.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                let mut c = gather_boundary(&mesh, i, j, |q| vert[q], |q| evert[q], |q| ehorz[q]);
                c[1][1] = center[k];
                c
            })
            .collect();
        Self { mesh, cells }
    }

    #[inline(always)]
    pub fn eval_local(&self, at: &LocalCoord<T>) -> PrimitiveState<T> {
        let c = &self.cells[self.mesh.index(at.i, at.j)];
        tensor_combine(c, lagrange_weights(at.xi), lagrange_weights(at.eta))
    }

    /// Biquadratic interpolant of the increments at an arbitrary point.
    pub fn eval(&self, x: T, y: T) -> Result<PrimitiveState<T>> {
        Ok(self.eval_local(&self.mesh.locate(x, y)?))
    }
}

/// Cells whose wedges meet at a point node, with the matching tables.
#[inline(always)]
fn wedges<'a, T: Real>(rec: &'a Reconstruction<T>, family: NodeFamily, i: usize, j: usize) -> ([(&'static WedgeTable, &'a CellNodes<T>); 4], usize) {
    let m = &rec.mesh;
    let (iw, js) = (m.west(i), m.south(j));
    match family {
        NodeFamily::Vertex => (
            [
                (&NORTH_EAST, rec.cell(i, j)),
                (&NORTH_WEST, rec.cell(iw, j)),
                (&SOUTH_WEST, rec.cell(iw, js)),
                (&SOUTH_EAST, rec.cell(i, js)),
            ],
            4,
        ),
        NodeFamily::VerticalEdge => {
            let r = rec.cell(i, j);
            ([(&RIGHT_HALF, r), (&LEFT_HALF, rec.cell(iw, j)), (&RIGHT_HALF, r), (&RIGHT_HALF, r)], 2)
        }
        NodeFamily::HorizontalEdge => {
            let t = rec.cell(i, j);
            ([(&TOP_HALF, t), (&BOTTOM_HALF, rec.cell(i, js)), (&TOP_HALF, t), (&TOP_HALF, t)], 2)
        }
    }
}

/// Frozen linearization and stencil moments at a point node.
#[inline]
pub fn point_acoustics<T: Real>(
    rec: &Reconstruction<T>,
    gas: &GasModel<T>,
    state: PrimitiveState<T>,
    family: NodeFamily,
    i: usize,
    j: usize,
) -> (FrozenAcoustics<T>, AcousticMoments<T>) {
    let frozen = FrozenAcoustics::new(gas, state, T::zero(), rec.mesh.h);
    let (list, n) = wedges(rec, family, i, j);
    (frozen, AcousticMoments::from_wedges(&list[..n], &frozen))
}

/// Frozen linearization and full-disk moments at the center of cell `(i, j)`.
#[inline]
pub fn center_acoustics<T: Real>(rec: &Reconstruction<T>, gas: &GasModel<T>, i: usize, j: usize) -> (FrozenAcoustics<T>, AcousticMoments<T>) {
    let cell = rec.cell(i, j);
    let frozen = FrozenAcoustics::new(gas, cell.center(), T::zero(), rec.mesh.h);
    (frozen, AcousticMoments::from_wedges(&[(&FULL_DISK, cell)], &frozen))
}

fn acoustic_nu<T: Real>(frozen: &FrozenAcoustics<T>, tau: T, h: T, guard: CflGuard, location: Location) -> Result<T> {
    let nu = frozen.c * tau / h;
    frozen.with_nu(nu).check(guard, location)?;
    Ok(nu)
}

/// Convective foot `P - tau u(P - tau u(P))` of the node at `pos` whose
/// own velocity is `w`.
#[inline]
pub fn footpoint<T: Real>(rec: &Reconstruction<T>, pos: [T; 2], w: &PrimitiveState<T>, tau: T) -> Result<LocalCoord<T>> {
    let first = rec.eval(pos[0] - tau * w.u, pos[1] - tau * w.v)?;
    rec.mesh.locate(pos[0] - tau * first.u, pos[1] - tau * first.v)
}

/// Advective subsolver: the time-n reconstruction at the convective foot
/// of an arbitrary point.
pub fn advect_footpoint<T: Real>(rec: &Reconstruction<T>, x: T, y: T, tau: T) -> Result<PrimitiveState<T>> {
    let w = rec.eval(x, y)?;
    Ok(rec.eval_local(&footpoint(rec, [x, y], &w, tau)?))
}

fn checked<T: Real>(w: PrimitiveState<T>, location: Location) -> Result<PrimitiveState<T>> {
    if w.is_physical() {
        Ok(w)
    } else {
        Err(Error::InvalidState { location, rho: w.rho.as_f64(), p: w.p.as_f64() })
    }
}

/// Increment fields for several step sizes from one reconstruction. The
/// stencil contraction at each node is shared by all step sizes.
pub fn build_increment_fields<T: Real>(
    rec: &Reconstruction<T>,
    gas: &GasModel<T>,
    field: &DofField<T>,
    taus: &[T],
    guard: CflGuard,
) -> Result<Vec<IncrementField<T>>> {
    let mesh = rec.mesh;
    let h = mesh.h;
    let per_family = |family: Option<NodeFamily>| -> Result<Vec<Vec<PrimitiveState<T>>>> {
        let rows = (0..mesh.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                let (frozen, moments, location) = match family {
                    Some(f) => {
                        let (fr, m) = point_acoustics(rec, gas, field.points(f).get(k), f, i, j);
                        (fr, m, f.location(i, j))
                    }
                    None => {
                        let (fr, m) = center_acoustics(rec, gas, i, j);
                        (fr, m, Location::Center { i, j })
                    }
                };
                taus.iter()
                    .map(|&tau| {
                        let nu = acoustic_nu(&frozen, tau, h, guard, location)?;
                        let after = moments.evaluate(&frozen, nu);
                        Ok(acoustic_increment(&frozen.state, &after, frozen.c))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((0..taus.len()).map(|t| rows.iter().map(|r| r[t]).collect()).collect())
    };
    let vert = per_family(Some(NodeFamily::Vertex))?;
    let evert = per_family(Some(NodeFamily::VerticalEdge))?;
    let ehorz = per_family(Some(NodeFamily::HorizontalEdge))?;
    let center = per_family(None)?;
    Ok((0..taus.len())
        .map(|t| IncrementField::from_nodes(mesh, &vert[t], &evert[t], &ehorz[t], &center[t]))
        .collect())
}

/// Single-step-size convenience wrapper around [`build_increment_fields`].
pub fn build_increment_field<T: Real>(field: &DofField<T>, gas: &GasModel<T>, tau: T, guard: CflGuard) -> Result<IncrementField<T>> {
    let rec = Reconstruction::new(field, gas)?;
    Ok(build_increment_fields(&rec, gas, field, &[tau], guard)?.remove(0))
}

/// Point values after each step size in `taus`, all evolved from the same
/// time-n data.
pub fn evolve_points<T: Real>(
    rec: &Reconstruction<T>,
    gas: &GasModel<T>,
    field: &DofField<T>,
    scheme: Scheme,
    taus: &[T],
    guard: CflGuard,
) -> Result<Vec<PointValues<T>>> {
    let mesh = rec.mesh;
    let h = mesh.h;
    let increments = match scheme {
        Scheme::RbTai => Some(build_increment_fields(rec, gas, field, taus, guard)?),
        Scheme::Rb => None,
        Scheme::SemiDiscrete => {
            return Err(Error::InvalidParameter("the semi-discrete scheme has no point update".into()))
        }
    };
    let empty = PrimitiveArray::filled(0, PrimitiveState::zero());
    let mut out: Vec<PointValues<T>> = (0..taus.len())
        .map(|_| PointValues { vert: empty.clone(), evert: empty.clone(), ehorz: empty.clone() })
        .collect();
    for family in NodeFamily::ALL {
        let pts = field.points(family);
        let rows = (0..mesh.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                let w = pts.get(k);
                let location = family.location(i, j);
                let pos = family.position(&mesh, i, j);
                let acoustics = match increments {
                    None => Some(point_acoustics(rec, gas, w, family, i, j)),
                    Some(_) => None,
                };
                taus.iter()
                    .enumerate()
                    .map(|(t, &tau)| {
                        let foot = footpoint(rec, pos, &w, tau)?;
                        let advected = rec.eval_local(&foot);
                        let delta = match (&increments, &acoustics) {
                            (Some(fields), _) => fields[t].eval_local(&foot),
                            (None, Some((frozen, moments))) => {
                                let nu = acoustic_nu(frozen, tau, h, guard, location)?;
                                acoustic_increment(&w, &moments.evaluate(frozen, nu), frozen.c)
                            }
                            (None, None) => unreachable!(),
                        };
                        checked(advected + delta, location)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for (t, values) in out.iter_mut().enumerate() {
            let states: Vec<_> = rows.iter().map(|r| r[t]).collect();
            values.set(family, PrimitiveArray::from_states(&states));
        }
    }
    Ok(out)
}

/// Evolves every point node over `tau` from the time-n field.
pub fn step_points<T: Real>(field: &DofField<T>, gas: &GasModel<T>, scheme: Scheme, tau: T, guard: CflGuard) -> Result<PointValues<T>> {
    let rec = Reconstruction::new(field, gas)?;
    Ok(evolve_points(&rec, gas, field, scheme, &[tau], guard)?.remove(0))
}

/// Additive update `S_ac W(P) + S_adv W(P) - W(P)` at a single node.
pub fn point_update_rb<T: Real>(
    rec: &Reconstruction<T>,
    gas: &GasModel<T>,
    field: &DofField<T>,
    family: NodeFamily,
    i: usize,
    j: usize,
    tau: T,
    guard: CflGuard,
) -> Result<PrimitiveState<T>> {
    let k = rec.mesh.index(i, j);
    let w = field.points(family).get(k);
    let location = family.location(i, j);
    let (frozen, moments) = point_acoustics(rec, gas, w, family, i, j);
    let nu = acoustic_nu(&frozen, tau, rec.mesh.h, guard, location)?;
    let acoustic = moments.evaluate(&frozen, nu);
    let foot = footpoint(rec, family.position(&rec.mesh, i, j), &w, tau)?;
    checked(acoustic + rec.eval_local(&foot) - w, location)
}

/// Transported update `S_adv W(P) + R_delta(P_f)` at a single node.
pub fn point_update_rb_tai<T: Real>(
    rec: &Reconstruction<T>,
    field: &DofField<T>,
    increments: &IncrementField<T>,
    family: NodeFamily,
    i: usize,
    j: usize,
    tau: T,
) -> Result<PrimitiveState<T>> {
    let w = field.points(family).get(rec.mesh.index(i, j));
    let foot = footpoint(rec, family.position(&rec.mesh, i, j), &w, tau)?;
    checked(rec.eval_local(&foot) + increments.eval_local(&foot), family.location(i, j))
}
