//! The Fourier symbols against the solvers they describe, on small-amplitude
//! plane waves sampled on a periodic grid.

use std::f64::consts::PI;

use activeflux::euler::{GasModel, PrimitiveState};
use activeflux::grid::{simpson_average, DofField, Mesh, NodeFamily, Reconstruction};
use activeflux::semidiscrete::point_rhs;
use activeflux::vonneumann::{center_fourier_factor, semidiscrete_symbol};
use num_complex::Complex64;

fn cis(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

/// Background plus `eps Re(r exp(i k.x))` on every point node, with averages
/// consistent with the exact center value of the wave.
fn sampled_wave(n: usize, modes: [i32; 2], r: [Complex64; 4], eps: f64, bg: PrimitiveState<f64>, gas: &GasModel<f64>) -> DofField<f64> {
    let mesh = Mesh::square(n, [0.0, 0.0], 1.0).unwrap();
    let h = mesh.h;
    let k = [2.0 * PI * modes[0] as f64, 2.0 * PI * modes[1] as f64];
    let state = |z: Complex64| bg + PrimitiveState::from_array(r.map(|a| eps * (a * z).re));
    let at = |x: [f64; 2]| state(cis(k[0] * x[0] + k[1] * x[1]));
    let mut field = DofField::uniform(mesh.clone(), gas, bg).unwrap();
    for j in 0..n {
        for i in 0..n {
            let idx = mesh.index(i, j);
            for family in NodeFamily::ALL {
                field.points_mut(family).set(idx, at(family.position(&mesh, i, j)));
            }
        }
    }
    for j in 0..n {
        for i in 0..n {
            let xc = mesh.cell_center(i, j);
            let center = state(center_fourier_factor(k[0] * h, k[1] * h, [xc[0] / h, xc[1] / h]));
            let mut nodes = field.boundary_nodes(i, j);
            nodes[1][1] = center;
            let cons = nodes.map(|row| row.map(|w| gas.prim_to_cons(w).unwrap()));
            field.avg.set(mesh.index(i, j), simpson_average(&cons));
        }
    }
    field
}

#[test]
fn center_nodes_of_sampled_wave_match_factor() {
    let gas = GasModel::air();
    let bg = PrimitiveState::new(1.0, 0.2, -0.1, 1.0);
    let r = [1.0, 0.3, -0.2, 0.8].map(|x| Complex64::new(x, 0.0));
    let field = sampled_wave(12, [2, -1], r, 1e-3, bg, &gas);
    let rec = Reconstruction::new(&field, &gas).unwrap();
    let h = field.mesh.h;
    let k = [4.0 * PI, -2.0 * PI];
    for (i, j) in [(0, 0), (5, 7), (11, 3)] {
        let xc = field.mesh.cell_center(i, j);
        let z = center_fourier_factor(k[0] * h, k[1] * h, [xc[0] / h, xc[1] / h]);
        let got = rec.cell(i, j).center();
        assert!((got.rho - bg.rho - 1e-3 * z.re).abs() < 1e-14);
    }
}

#[test]
fn edge_rhs_matches_semidiscrete_symbol() {
    let gas = GasModel::air();
    let theta = 25f64.to_radians();
    let n = 16;
    for bg in [
        PrimitiveState::new(1.0, 0.4 * theta.cos(), 0.4 * theta.sin(), 1.0),
        PrimitiveState::new(1.0, -1.5, 0.3, 1.0),
    ] {
        for modes in [[1, 0], [2, 3], [-3, 1]] {
            let c0 = gas.sound_speed(&bg);
            let r = [1.0 / (c0 * c0), 0.3, -0.7, 1.0].map(|x| Complex64::new(x, 0.2 * x));
            let eps = 1e-6;
            let field = sampled_wave(n, modes, r, eps, bg, &gas);
            let rec = Reconstruction::new(&field, &gas).unwrap();
            let h = field.mesh.h;
            let k = [2.0 * PI * modes[0] as f64, 2.0 * PI * modes[1] as f64];
            let m = semidiscrete_symbol(k[0] * h, k[1] * h, h, &bg, &gas);
            for (i, j) in [(0, 0), (7, 4), (15, 15)] {
                let p = field.mesh.vertical_edge(i, j);
                let phase = cis(k[0] * p[0] + k[1] * p[1]);
                let got = point_rhs(&rec, &gas, &field, NodeFamily::VerticalEdge, i, j).unwrap().to_array();
                let mut scale = 0.0f64;
                let mut worst = 0.0f64;
                for row in 0..4 {
                    let mr: Complex64 = (0..4).map(|col| m[row][col] * r[col]).sum();
                    let want = (mr * phase).re;
                    scale = scale.max(mr.norm());
                    worst = worst.max((got[row] / eps - want).abs());
                }
                assert!(worst < 1e-5 * scale, "bg {bg:?} modes {modes:?} node ({i},{j}): {worst} vs {scale}");
            }
        }
    }
}
