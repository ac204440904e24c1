//! Method-of-lines Active Flux: point values follow the primitive system
//! with upwinded reconstruction derivatives, averages follow instantaneous
//! Simpson fluxes, and SSPRK3 integrates both together.

use std::time::Instant;

use rayon::prelude::*;

use crate::acoustic::CflGuard;
use crate::average::{cfl_numbers, check_conservation, conservation_residuals, edge_fluxes, flux_divergence};
use crate::average::{PhaseTimings, StepOptions, StepReport};
use crate::error::{Error, Result};
use crate::euler::{GasModel, PrimitiveState};
use crate::grid::{ConservativeArray, DofField, NodeFamily, PrimitiveArray, Reconstruction};
use crate::point_update::PointValues;
use crate::scalar::Real;

/// Time derivative of every unknown, laid out like a [`DofField`].
pub type SemiDiscreteRhs<T> = DofField<T>;

/// Splits `A d` for the primitive flux Jacobian in direction `dir`
/// (0 for x, 1 for y) into the parts carried by non-negative and negative
/// eigenvalues.
pub fn split_jacobian<T: Real>(w: &PrimitiveState<T>, c: T, d: &PrimitiveState<T>, dir: usize) -> (PrimitiveState<T>, PrimitiveState<T>) {
    let (un, dn, dt_) = if dir == 0 { (w.u, d.u, d.v) } else { (w.v, d.v, d.u) };
    let half = T::lit(0.5);
    let dp_z = d.p / (w.rho * c * c);
    let plus = (dp_z + dn / c) * half;
    let minus = (dp_z - dn / c) * half;
    let entropy = d.rho - d.p / (c * c);
    let build = |rho: T, normal: T, tangential: T, p: T| {
        if dir == 0 {
            PrimitiveState::new(rho, normal, tangential, p)
        } else {
            PrimitiveState::new(rho, tangential, normal, p)
        }
    };
    let acoustic = |alpha: T, sign: T| build(w.rho * alpha, sign * c * alpha, T::zero(), w.rho * c * c * alpha);
    let wave_parts = [
        (un + c, acoustic(plus, T::one())),
        (un - c, acoustic(minus, -T::one())),
        (un, build(entropy, T::zero(), T::zero(), T::zero())),
        (un, build(T::zero(), T::zero(), dt_, T::zero())),
    ];
    let mut pos = PrimitiveState::zero();
    let mut neg = PrimitiveState::zero();
    for (lambda, r) in wave_parts {
        if lambda >= T::zero() {
            pos += r * lambda;
        } else {
            neg += r * lambda;
        }
    }
    (pos, neg)
}

/// Unsplit primitive Jacobian product `A^x dx + A^y dy`.
pub fn primitive_advection<T: Real>(gas: &GasModel<T>, w: &PrimitiveState<T>, dx: &PrimitiveState<T>, dy: &PrimitiveState<T>) -> PrimitiveState<T> {
    let div = dx.u + dy.v;
    PrimitiveState::new(
        w.u * dx.rho + w.v * dy.rho + w.rho * div,
        w.u * dx.u + w.v * dy.u + dx.p / w.rho,
        w.u * dx.v + w.v * dy.v + dy.p / w.rho,
        w.u * dx.p + w.v * dy.p + gas.gamma() * w.p * div,
    )
}

/// One-sided derivatives at the last node of `[far, mid, near]` and the
/// first node of `[near, mid, far]`, spacing `h / 2`.
#[inline(always)]
fn one_sided<T: Real>(l: [PrimitiveState<T>; 3], r: [PrimitiveState<T>; 3], h: T) -> (PrimitiveState<T>, PrimitiveState<T>) {
    let inv = h.recip();
    let dl = (l[0] - l[1] * T::lit(4.0) + l[2] * T::lit(3.0)) * inv;
    let dr = (r[0] * T::lit(-3.0) + r[1] * T::lit(4.0) - r[2]) * inv;
    (dl, dr)
}

/// Time derivative of the point value at node `(i, j)` of `family`.
pub fn point_rhs<T: Real>(rec: &Reconstruction<T>, gas: &GasModel<T>, field: &DofField<T>, family: NodeFamily, i: usize, j: usize) -> Result<PrimitiveState<T>> {
    let m = &rec.mesh;
    let h = m.h;
    let (iw, ie, js, jn) = (m.west(i), m.east(i), m.south(j), m.north(j));
    let k = m.index(i, j);
    let vert = |i, j| field.vert.get(m.index(i, j));
    let w = field.points(family).get(k);
    if !w.is_physical() {
        return Err(Error::InvalidState { location: family.location(i, j), rho: w.rho.as_f64(), p: w.p.as_f64() });
    }
    let c = gas.sound_speed(&w);
    let upwind = |dl: PrimitiveState<T>, dr: PrimitiveState<T>, dir| {
        let (pos, _) = split_jacobian(&w, c, &dl, dir);
        let (_, neg) = split_jacobian(&w, c, &dr, dir);
        pos + neg
    };
    let flux = match family {
        NodeFamily::VerticalEdge => {
            let ev = |i, j| field.evert.get(m.index(i, j));
            let (dl, dr) = one_sided(
                [ev(iw, j), rec.cell(iw, j).center(), w],
                [w, rec.cell(i, j).center(), ev(ie, j)],
                h,
            );
            let dy = (vert(i, jn) - vert(i, j)) * h.recip();
            upwind(dl, dr, 0) + tangential(&w, c, &dy, 1)
        }
        NodeFamily::HorizontalEdge => {
            let eh = |i, j| field.ehorz.get(m.index(i, j));
            let (db, dt) = one_sided(
                [eh(i, js), rec.cell(i, js).center(), w],
                [w, rec.cell(i, j).center(), eh(i, jn)],
                h,
            );
            let dx = (vert(ie, j) - vert(i, j)) * h.recip();
            upwind(db, dt, 1) + tangential(&w, c, &dx, 0)
        }
        NodeFamily::Vertex => {
            let eh = |i, j| field.ehorz.get(m.index(i, j));
            let ev = |i, j| field.evert.get(m.index(i, j));
            let (dl, dr) = one_sided([vert(iw, j), eh(iw, j), w], [w, eh(i, j), vert(ie, j)], h);
            let (db, dt) = one_sided([vert(i, js), ev(i, js), w], [w, ev(i, j), vert(i, jn)], h);
            upwind(dl, dr, 0) + upwind(db, dt, 1)
        }
    };
    Ok(-flux)
}

fn tangential<T: Real>(w: &PrimitiveState<T>, c: T, d: &PrimitiveState<T>, dir: usize) -> PrimitiveState<T> {
    let (pos, neg) = split_jacobian(w, c, d, dir);
    pos + neg
}

/// Cell-average time derivative `-(flux differences) / h`.
pub fn average_rhs<T: Real>(field: &DofField<T>, gas: &GasModel<T>) -> Result<ConservativeArray<T>> {
    let fluxes = edge_fluxes(&field.mesh, &PointValues::from_field(field), gas)?;
    let div = flux_divergence(&field.mesh, &fluxes);
    Ok(ConservativeArray::from_states(&div.into_iter().map(|d| -d).collect::<Vec<_>>()))
}

/// Right-hand side of the whole ODE system.
pub fn rhs<T: Real>(field: &DofField<T>, gas: &GasModel<T>) -> Result<SemiDiscreteRhs<T>> {
    let rec = Reconstruction::new(field, gas)?;
    rhs_with(&rec, field, gas)
}

fn rhs_with<T: Real>(rec: &Reconstruction<T>, field: &DofField<T>, gas: &GasModel<T>) -> Result<SemiDiscreteRhs<T>> {
    let mesh = field.mesh;
    let family_rhs = |family: NodeFamily| -> Result<PrimitiveArray<T>> {
        let v = (0..mesh.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = mesh.ij(k);
                point_rhs(rec, gas, field, family, i, j)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PrimitiveArray::from_states(&v))
    };
    Ok(DofField {
        mesh,
        avg: average_rhs(field, gas)?,
        vert: family_rhs(NodeFamily::Vertex)?,
        evert: family_rhs(NodeFamily::VerticalEdge)?,
        ehorz: family_rhs(NodeFamily::HorizontalEdge)?,
    })
}

fn stage<T: Real>(field: &DofField<T>, gas: &GasModel<T>, dt: T, rec: Option<&Reconstruction<T>>) -> Result<DofField<T>> {
    let l = match rec {
        Some(r) => rhs_with(r, field, gas)?,
        None => rhs(field, gas)?,
    };
    let mut next = field.clone();
    next.axpby(T::one(), &l, dt);
    Ok(next)
}

/// One SSPRK3 step, with the same report as the fully discrete schemes.
pub fn ssprk3_step_report<T: Real>(field: &DofField<T>, gas: &GasModel<T>, dt: T, options: &StepOptions) -> Result<(DofField<T>, StepReport)> {
    let clock = Instant::now();
    let rec = Reconstruction::new(field, gas)?;
    let (max_nu, max_cfl) = cfl_numbers(&rec, gas, dt);
    let mut timings = PhaseTimings { reconstruction: clock.elapsed(), ..Default::default() };

    let clock = Instant::now();
    let u1 = stage(field, gas, dt, Some(&rec))?;
    u1.validate(gas)?;
    let mut u2 = stage(&u1, gas, dt, None)?;
    u2.axpby(T::lit(0.25), field, T::lit(0.75));
    u2.validate(gas)?;
    let mut u3 = stage(&u2, gas, dt, None)?;
    u3.axpby(T::lit(2.0 / 3.0), field, T::lit(1.0 / 3.0));
    u3.validate(gas)?;
    timings.points = clock.elapsed();

    let clock = Instant::now();
    let conservation = conservation_residuals(&field.avg, &u3.avg);
    check_conservation(&conservation, options.conservation_limit)?;
    timings.averages = clock.elapsed();
    Ok((u3, StepReport { dt: dt.as_f64(), max_nu, max_cfl, timings, conservation }))
}

/// One SSPRK3 step `U1 = U + dt L(U)`, `U2 = 3/4 U + 1/4 (U1 + dt L(U1))`,
/// `U' = 1/3 U + 2/3 (U2 + dt L(U2))`.
pub fn ssprk3_step<T: Real>(field: &DofField<T>, gas: &GasModel<T>, dt: T) -> Result<DofField<T>> {
    let options = StepOptions { guard: CflGuard::Override, ..StepOptions::default() };
    Ok(ssprk3_step_report(field, gas, dt, &options)?.0)
}
