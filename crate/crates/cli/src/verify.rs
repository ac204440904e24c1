//! A quick battery of oracle and property checks against the built solver.

use std::f64::consts::PI;

use activeflux::average::{advance_step, cfl_time_step, conservation_residuals, StepOptions};
use activeflux::euler::{GasModel, PrimitiveState};
use activeflux::grid::{DofField, Mesh, NodeFamily};
use activeflux::problems::{ProblemId, ProblemSpec};
use activeflux::studies::mixed_packet_table;
use activeflux::vonneumann::{acoustic_pressure_gain_collected, acoustic_pressure_gain_contraction, WaveConfig};
use activeflux::Scheme;
use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn bound(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Self { name: name.into(), passed: value <= limit, detail: format!("{value:.3e} (limit {limit:.0e})") }
    }
}

pub fn run_all(seed: u64) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for scheme in Scheme::ALL {
        checks.push(uniform_state(scheme)?);
        checks.push(conservation(scheme)?);
        checks.push(mirror_symmetry(scheme)?);
    }
    checks.push(symbol_forms(seed)?);
    checks.extend(packet_rates()?);
    Ok(checks)
}

fn cfl_for(scheme: Scheme) -> f64 {
    if scheme == Scheme::SemiDiscrete {
        0.3
    } else {
        0.4
    }
}

fn steps(field: &DofField<f64>, gas: &GasModel<f64>, scheme: Scheme, n: usize) -> Result<DofField<f64>> {
    let mut field = field.clone();
    for _ in 0..n {
        let dt = cfl_time_step(&field, gas, cfl_for(scheme))?;
        field = advance_step(&field, gas, scheme, dt, &StepOptions::default())?.0;
    }
    Ok(field)
}

fn max_difference(a: &DofField<f64>, b: &DofField<f64>) -> f64 {
    a.components()
        .iter()
        .zip(b.components())
        .flat_map(|(x, y)| x.iter().zip(y).map(|(p, q)| (p - q).abs()))
        .fold(0.0, f64::max)
}

fn uniform_state(scheme: Scheme) -> Result<Check> {
    let gas = GasModel::air();
    let mesh = Mesh::new(12, 9, [0.0, 0.0], [1.0, 0.75])?;
    let field = DofField::uniform(mesh, &gas, PrimitiveState::new(1.2, 0.3, -0.2, 0.9))?;
    let after = steps(&field, &gas, scheme, 3)?;
    Ok(Check::bound(format!("{scheme} keeps a uniform state"), max_difference(&field, &after), 1e-13))
}

fn conservation(scheme: Scheme) -> Result<Check> {
    let spec = ProblemSpec::new(ProblemId::Vortex);
    let gas = spec.gas()?;
    let field = spec.initial_field(spec.mesh(16)?)?;
    let after = steps(&field, &gas, scheme, 2)?;
    let worst = conservation_residuals(&field.avg, &after.avg).into_iter().fold(0.0, f64::max);
    Ok(Check::bound(format!("{scheme} conserves mass, momentum and energy"), worst, 1e-12))
}

/// Reflection `x -> x0 + lx - (x - x0)` of every unknown, with `u` negated.
fn mirror_x(field: &DofField<f64>) -> DofField<f64> {
    let mesh = field.mesh;
    let mut out = field.clone();
    let (nx, ny) = (mesh.nx, mesh.ny);
    for j in 0..ny {
        for i in 0..nx {
            let cell = mesh.index(nx - 1 - i, j);
            let edge = mesh.index((nx - i) % nx, j);
            let mut c = field.avg.get(mesh.index(i, j));
            c.mx = -c.mx;
            out.avg.set(cell, c);
            for (family, target) in [
                (NodeFamily::Vertex, edge),
                (NodeFamily::VerticalEdge, edge),
                (NodeFamily::HorizontalEdge, cell),
            ] {
                let mut w = field.points(family).get(mesh.index(i, j));
                w.u = -w.u;
                out.points_mut(family).set(target, w);
            }
        }
    }
    out
}

fn mirror_symmetry(scheme: Scheme) -> Result<Check> {
    let mut spec = ProblemSpec::new(ProblemId::Vortex);
    spec.set("v_inf", 0.3)?;
    let gas = spec.gas()?;
    let field = spec.initial_field(spec.mesh(16)?)?;
    let a = mirror_x(&steps(&field, &gas, scheme, 3)?);
    let b = steps(&mirror_x(&field), &gas, scheme, 3)?;
    Ok(Check::bound(format!("{scheme} commutes with the x reflection"), max_difference(&a, &b), 1e-12))
}

fn symbol_forms(seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gas = GasModel::air();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let bg = PrimitiveState::new(rng.gen_range(0.5..2.0), rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5), rng.gen_range(0.5..2.0));
        let branch = if rng.gen_bool(0.5) { 1 } else { -1 };
        let cfg = WaveConfig::new(rng.gen_range(-PI..PI), rng.gen_range(-PI..PI), rng.gen_range(0.0..=0.5), branch, bg, gas)?;
        worst = worst.max((acoustic_pressure_gain_contraction(&cfg) - acoustic_pressure_gain_collected(&cfg)).norm());
    }
    Ok(Check::bound("acoustic symbol: stencil contraction equals collected form", worst, 1e-12))
}

fn packet_rates() -> Result<Vec<Check>> {
    let spec = ProblemSpec::new(ProblemId::MixedPacket);
    let mut checks = Vec::new();
    for (scheme, lo, hi) in [(Scheme::Rb, 1.8, 2.2), (Scheme::RbTai, 2.8, 3.3)] {
        let rows = mixed_packet_table(&spec, scheme, &[8, 16, 32])?;
        let rate = rows.last().and_then(|r| r.rate).unwrap_or(f64::NAN);
        checks.push(Check {
            name: format!("{scheme} one-step wave packet order"),
            passed: (lo..=hi).contains(&rate),
            detail: format!("rate {rate:.3} (expected {lo}..{hi})"),
        });
    }
    Ok(checks)
}
