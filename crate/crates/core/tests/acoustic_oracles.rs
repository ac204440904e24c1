//! Independent checks of the acoustic stencils: a direct quadrature of the
//! exact frozen acoustic evolution, and a second transcription of the
//! vertical-edge polynomials.

use std::f64::consts::{FRAC_PI_2, PI};

use activeflux::acoustic::{
    acoustic_update_center, acoustic_update_horizontal_edge, acoustic_update_vertex,
    acoustic_update_vertical_edge, stencils_vertical_edge, FrozenAcoustics,
};
use activeflux::euler::{GasModel, PrimitiveState};
use activeflux::grid::CellNodes;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

fn integrate(rule: &[(f64, f64)], a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
    let (m, r) = (0.5 * (a + b), 0.5 * (b - a));
    rule.iter().map(|&(x, w)| w * r * f(m + r * x)).sum()
}

/// Continuous piecewise biquadratic data on unit cells around the target
/// point. Each angular sector of the Mach disk lies in one cell.
struct Piecewise {
    sectors: Vec<(f64, f64, CellNodes<f64>, [f64; 2])>,
}

struct Sample {
    w: PrimitiveState<f64>,
    dx: PrimitiveState<f64>,
    dy: PrimitiveState<f64>,
}

impl Piecewise {
    fn sample(&self, s: usize, x: f64, y: f64) -> Sample {
        let (_, _, nodes, [xl, yl]) = &self.sectors[s];
        let xi = 2.0 * (x - xl) - 1.0;
        let eta = 2.0 * (y - yl) - 1.0;
        let (dx, dy) = nodes.gradient(xi, eta, 1.0);
        Sample { w: nodes.eval(xi, eta), dx, dy }
    }

    /// Angular mean over the circle of radius `r`, split by sectors.
    fn mean(&self, rule: &[(f64, f64)], r: f64, f: impl Fn(&Sample, f64) -> f64) -> f64 {
        let mut total = 0.0;
        for (s, (t0, t1, _, _)) in self.sectors.iter().enumerate() {
            total += integrate(rule, *t0, *t1, |th| f(&self.sample(s, r * th.cos(), r * th.sin()), th));
        }
        total / (2.0 * PI)
    }

    /// Exact frozen acoustic evolution at the origin after `c t = big_t`.
    fn evolve(&self, big_t: f64, z: f64) -> PrimitiveState<f64> {
        let rule = gauss_legendre(24);
        let p0 = self.sample(0, 0.0, 0.0).w;
        let div = |s: &Sample| s.dx.u + s.dy.v;
        let radial = |phi: f64| big_t * phi.sin();
        let p = integrate(&rule, 0.0, FRAC_PI_2, |phi| {
            let r = radial(phi);
            let mp = self.mean(&rule, r, |s, _| s.w.p);
            let mdp = self.mean(&rule, r, |s, th| th.cos() * s.dx.p + th.sin() * s.dy.p);
            let mdiv = self.mean(&rule, r, |s, _| div(s));
            phi.sin() * (mp + r * mdp) - z * big_t * phi.sin() * mdiv
        });
        let u = p0.u
            + integrate(&rule, 0.0, FRAC_PI_2, |phi| {
                let r = radial(phi);
                -big_t / z * phi.sin() * self.mean(&rule, r, |s, _| s.dx.p)
                    + big_t * self.mean(&rule, r, |s, th| th.cos() * div(s))
            });
        let v = p0.v
            + integrate(&rule, 0.0, FRAC_PI_2, |phi| {
                let r = radial(phi);
                -big_t / z * phi.sin() * self.mean(&rule, r, |s, _| s.dy.p)
                    + big_t * self.mean(&rule, r, |s, th| th.sin() * div(s))
            });
        PrimitiveState::new(0.0, u, v, p)
    }
}

/// Deterministic pseudo-random numbers in `[0, 1)`.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    fn state(&mut self) -> PrimitiveState<f64> {
        PrimitiveState::new(1.0 + 0.2 * self.next(), self.next() - 0.5, self.next() - 0.5, 1.0 + 0.3 * self.next())
    }
}

/// Random nodal lattice with spacing 1/2 whose lower-left node is at
/// `origin`; cells are carved out of it so the data are continuous.
struct Lattice {
    nodes: Vec<Vec<PrimitiveState<f64>>>,
    origin: [f64; 2],
}

impl Lattice {
    fn random(rng: &mut Lcg, nx: usize, ny: usize, origin: [f64; 2]) -> Self {
        let nodes = (0..2 * nx + 1).map(|_| (0..2 * ny + 1).map(|_| rng.state()).collect()).collect();
        Self { nodes, origin }
    }

    fn cell(&self, ci: usize, cj: usize) -> (CellNodes<f64>, [f64; 2]) {
        let mut n = CellNodes::default();
        for a in 0..3 {
            for b in 0..3 {
                n.w[a][b] = self.nodes[2 * ci + a][2 * cj + b];
            }
        }
        (n, [self.origin[0] + ci as f64, self.origin[1] + cj as f64])
    }
}

fn frozen(state: PrimitiveState<f64>, nu: f64) -> FrozenAcoustics<f64> {
    let gas = GasModel::air();
    let c = gas.sound_speed(&state);
    FrozenAcoustics::new(&gas, state, nu / c, 1.0)
}

fn assert_close(a: PrimitiveState<f64>, b: PrimitiveState<f64>, tol: f64) {
    for (x, y) in [(a.u, b.u), (a.v, b.v), (a.p, b.p)] {
        assert!((x - y).abs() < tol, "{a:?} vs {b:?}");
    }
}

#[test]
fn vertex_stencils_match_quadrature() {
    let mut rng = Lcg(7);
    for trial in 0..4 {
        let lat = Lattice::random(&mut rng, 2, 2, [-1.0, -1.0]);
        let (sw, sw_o) = lat.cell(0, 0);
        let (se, se_o) = lat.cell(1, 0);
        let (nw, nw_o) = lat.cell(0, 1);
        let (ne, ne_o) = lat.cell(1, 1);
        let pw = Piecewise {
            sectors: vec![
                (0.0, FRAC_PI_2, ne, ne_o),
                (FRAC_PI_2, PI, nw, nw_o),
                (PI, 1.5 * PI, sw, sw_o),
                (1.5 * PI, 2.0 * PI, se, se_o),
            ],
        };
        for nu in [0.0, 0.2, 0.37, 0.5] {
            let f = frozen(ne.w[0][0], nu);
            let got = acoustic_update_vertex(&sw, &se, &nw, &ne, &f).unwrap();
            let want = pw.evolve(nu, f.z);
            assert_close(got, want, 1e-8);
            if trial == 0 && nu == 0.2 {
                assert_close(got, want, 1e-12);
            }
        }
    }
}

#[test]
fn center_stencils_match_quadrature() {
    let mut rng = Lcg(11);
    for _ in 0..4 {
        let lat = Lattice::random(&mut rng, 1, 1, [-0.5, -0.5]);
        let (cell, o) = lat.cell(0, 0);
        let pw = Piecewise { sectors: vec![(0.0, 2.0 * PI, cell, o)] };
        for nu in [0.1, 0.3, 0.5] {
            let f = frozen(cell.w[1][1], nu);
            assert_close(acoustic_update_center(&cell, &f).unwrap(), pw.evolve(nu, f.z), 1e-8);
        }
    }
}

/// Linear pressure gives back the center value at leading order, and the
/// quadrature agrees exactly.
#[test]
fn center_linear_pressure() {
    let mut cell = CellNodes::default();
    for a in 0..3 {
        for b in 0..3 {
            let x = 0.5 * (a as f64 - 1.0);
            cell.w[a][b] = PrimitiveState::new(1.0, 0.0, 0.0, 1.0 + 0.1 * x);
        }
    }
    let pw = Piecewise { sectors: vec![(0.0, 2.0 * PI, cell, [-0.5, -0.5])] };
    let f = frozen(cell.w[1][1], 0.3);
    let got = acoustic_update_center(&cell, &f).unwrap();
    assert!((got.p - 1.0).abs() < 1e-15);
    assert_close(got, pw.evolve(0.3, f.z), 1e-12);
    assert!(got.u < 0.0);
}

#[test]
fn edge_stencils_match_quadrature() {
    let mut rng = Lcg(5);
    for _ in 0..3 {
        let lat = Lattice::random(&mut rng, 2, 1, [-1.0, -0.5]);
        let (l, lo) = lat.cell(0, 0);
        let (r, ro) = lat.cell(1, 0);
        let pw = Piecewise { sectors: vec![(-FRAC_PI_2, FRAC_PI_2, r, ro), (FRAC_PI_2, 1.5 * PI, l, lo)] };
        for nu in [0.15, 0.5] {
            let f = frozen(r.w[0][1], nu);
            assert_close(acoustic_update_vertical_edge(&l, &r, &f).unwrap(), pw.evolve(nu, f.z), 1e-8);
        }
        let lat = Lattice::random(&mut rng, 1, 2, [-0.5, -1.0]);
        let (b, bo) = lat.cell(0, 0);
        let (t, to) = lat.cell(0, 1);
        let pw = Piecewise { sectors: vec![(0.0, PI, t, to), (PI, 2.0 * PI, b, bo)] };
        for nu in [0.15, 0.5] {
            let f = frozen(t.w[1][0], nu);
            assert_close(acoustic_update_horizontal_edge(&b, &t, &f).unwrap(), pw.evolve(nu, f.z), 1e-8);
        }
    }
}

/// Horizontal update of transposed data equals the vertical update with
/// velocity components exchanged.
#[test]
fn horizontal_edge_is_transposed_vertical_edge() {
    let mut rng = Lcg(3);
    let lat = Lattice::random(&mut rng, 2, 1, [-1.0, -0.5]);
    let (l, _) = lat.cell(0, 0);
    let (r, _) = lat.cell(1, 0);
    let tr = |n: &CellNodes<f64>| {
        let mut t = CellNodes::default();
        for a in 0..3 {
            for b in 0..3 {
                let w = n.w[b][a];
                t.w[a][b] = PrimitiveState::new(w.rho, w.v, w.u, w.p);
            }
        }
        t
    };
    let f = frozen(r.w[0][1], 0.3);
    let ft = frozen(tr(&r).w[1][0], 0.3);
    let v = acoustic_update_vertical_edge(&l, &r, &f).unwrap();
    let h = acoustic_update_horizontal_edge(&tr(&l), &tr(&r), &ft).unwrap();
    assert!((v.u - h.v).abs() < 1e-14 && (v.v - h.u).abs() < 1e-14 && (v.p - h.p).abs() < 1e-14);
}

type Entry = fn(f64) -> f64;

/// Right-half stencils written out entry by entry.
fn printed_right() -> [(&'static str, [[Entry; 3]; 3]); 6] {
    [
        (
            "uu",
            [
                [|n| n.powi(3) * (2.0 * n - 3.0) / 6.0, |n| -(4.0 * n.powi(4) - 6.0 * n.powi(3) - 6.0 * n * n + 9.0 * n - 3.0) / 6.0, |n| n.powi(3) * (2.0 * n - 3.0) / 6.0],
                [|n| -2.0 * n.powi(3) * (n - 1.0) / 3.0, |n| 2.0 * n * (n - 1.0) * (2.0 * n * n - 3.0) / 3.0, |n| -2.0 * n.powi(3) * (n - 1.0) / 3.0],
                [|n| n.powi(3) * (2.0 * n - 1.0) / 6.0, |n| -n * (2.0 * n - 1.0) * (2.0 * n * n - 3.0) / 6.0, |n| n.powi(3) * (2.0 * n - 1.0) / 6.0],
            ],
        ),
        (
            "uv",
            [
                [|n| -n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0, |_| 0.0, |n| n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0],
                [|n| n * n * (2.0 * n - 3.0) / 3.0, |_| 0.0, |n| -n * n * (2.0 * n - 3.0) / 3.0],
                [|n| -n * n * (4.0 * n - 3.0) / 12.0, |_| 0.0, |n| n * n * (4.0 * n - 3.0) / 12.0],
            ],
        ),
        (
            "up",
            [
                [|n| -n * n * (n - 1.0).powi(2) / 2.0, |n| (n - 1.0) * (2.0 * n.powi(3) - 2.0 * n * n - 2.0 * n + 1.0) / 2.0, |n| -n * n * (n - 1.0).powi(2) / 2.0],
                [|n| n.powi(3) * (3.0 * n - 4.0) / 3.0, |n| -2.0 * n * (3.0 * n.powi(3) - 4.0 * n * n - 3.0 * n + 3.0) / 3.0, |n| n.powi(3) * (3.0 * n - 4.0) / 3.0],
                [|n| -n.powi(3) * (3.0 * n - 2.0) / 6.0, |n| n * (6.0 * n.powi(3) - 4.0 * n * n - 6.0 * n + 3.0) / 6.0, |n| -n.powi(3) * (3.0 * n - 2.0) / 6.0],
            ],
        ),
        (
            "vv",
            [
                [|n| n * n * (n * n - 3.0 * n + 3.0) / 3.0, |n| -(4.0 * n.powi(4) - 12.0 * n.powi(3) + 12.0 * n * n - 3.0) / 6.0, |n| n * n * (n * n - 3.0 * n + 3.0) / 3.0],
                [|n| -2.0 * n.powi(3) * (n - 2.0) / 3.0, |n| 4.0 * n.powi(3) * (n - 2.0) / 3.0, |n| -2.0 * n.powi(3) * (n - 2.0) / 3.0],
                [|n| n.powi(3) * (n - 1.0) / 3.0, |n| -2.0 * n.powi(3) * (n - 1.0) / 3.0, |n| n.powi(3) * (n - 1.0) / 3.0],
            ],
        ),
        (
            "vp",
            [
                [|n| n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0, |_| 0.0, |n| -n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0],
                [|n| -n * n * (2.0 * n - 3.0) / 3.0, |_| 0.0, |n| n * n * (2.0 * n - 3.0) / 3.0],
                [|n| n * n * (4.0 * n - 3.0) / 12.0, |_| 0.0, |n| -n * n * (4.0 * n - 3.0) / 12.0],
            ],
        ),
        (
            "pp",
            [
                [|n| n * n * (4.0 * n * n - 9.0 * n + 6.0) / 6.0, |n| -(8.0 * n.powi(4) - 18.0 * n.powi(3) + 6.0 * n * n + 9.0 * n - 3.0) / 6.0, |n| n * n * (4.0 * n * n - 9.0 * n + 6.0) / 6.0],
                [|n| -2.0 * n.powi(3) * (2.0 * n - 3.0) / 3.0, |n| 2.0 * n * (4.0 * n.powi(3) - 6.0 * n * n - 3.0 * n + 3.0) / 3.0, |n| -2.0 * n.powi(3) * (2.0 * n - 3.0) / 3.0],
                [|n| n.powi(3) * (4.0 * n - 3.0) / 6.0, |n| -n * (8.0 * n.powi(3) - 6.0 * n * n - 6.0 * n + 3.0) / 6.0, |n| n.powi(3) * (4.0 * n - 3.0) / 6.0],
            ],
        ),
    ]
}

/// Left-half stencils written out entry by entry.
fn printed_left() -> [(&'static str, [[Entry; 3]; 3]); 6] {
    [
        (
            "uu",
            [
                [|n| n.powi(3) * (2.0 * n - 1.0) / 6.0, |n| -n * (2.0 * n - 1.0) * (2.0 * n * n - 3.0) / 6.0, |n| n.powi(3) * (2.0 * n - 1.0) / 6.0],
                [|n| -2.0 * n.powi(3) * (n - 1.0) / 3.0, |n| 2.0 * n * (n - 1.0) * (2.0 * n * n - 3.0) / 3.0, |n| -2.0 * n.powi(3) * (n - 1.0) / 3.0],
                [|n| n.powi(3) * (2.0 * n - 3.0) / 6.0, |n| -(4.0 * n.powi(4) - 6.0 * n.powi(3) - 6.0 * n * n + 9.0 * n - 3.0) / 6.0, |n| n.powi(3) * (2.0 * n - 3.0) / 6.0],
            ],
        ),
        (
            "uv",
            [
                [|n| n * n * (4.0 * n - 3.0) / 12.0, |_| 0.0, |n| -n * n * (4.0 * n - 3.0) / 12.0],
                [|n| -n * n * (2.0 * n - 3.0) / 3.0, |_| 0.0, |n| n * n * (2.0 * n - 3.0) / 3.0],
                [|n| n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0, |_| 0.0, |n| -n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0],
            ],
        ),
        (
            "up",
            [
                [|n| n.powi(3) * (3.0 * n - 2.0) / 6.0, |n| -n * (6.0 * n.powi(3) - 4.0 * n * n - 6.0 * n + 3.0) / 6.0, |n| n.powi(3) * (3.0 * n - 2.0) / 6.0],
                [|n| -n.powi(3) * (3.0 * n - 4.0) / 3.0, |n| 2.0 * n * (3.0 * n.powi(3) - 4.0 * n * n - 3.0 * n + 3.0) / 3.0, |n| -n.powi(3) * (3.0 * n - 4.0) / 3.0],
                [|n| n * n * (n - 1.0).powi(2) / 2.0, |n| -(n - 1.0) * (2.0 * n.powi(3) - 2.0 * n * n - 2.0 * n + 1.0) / 2.0, |n| n * n * (n - 1.0).powi(2) / 2.0],
            ],
        ),
        (
            "vv",
            [
                [|n| n.powi(3) * (n - 1.0) / 3.0, |n| -2.0 * n.powi(3) * (n - 1.0) / 3.0, |n| n.powi(3) * (n - 1.0) / 3.0],
                [|n| -2.0 * n.powi(3) * (n - 2.0) / 3.0, |n| 4.0 * n.powi(3) * (n - 2.0) / 3.0, |n| -2.0 * n.powi(3) * (n - 2.0) / 3.0],
                [|n| n * n * (n * n - 3.0 * n + 3.0) / 3.0, |n| -(4.0 * n.powi(4) - 12.0 * n.powi(3) + 12.0 * n * n - 3.0) / 6.0, |n| n * n * (n * n - 3.0 * n + 3.0) / 3.0],
            ],
        ),
        (
            "vp",
            [
                [|n| n * n * (4.0 * n - 3.0) / 12.0, |_| 0.0, |n| -n * n * (4.0 * n - 3.0) / 12.0],
                [|n| -n * n * (2.0 * n - 3.0) / 3.0, |_| 0.0, |n| n * n * (2.0 * n - 3.0) / 3.0],
                [|n| n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0, |_| 0.0, |n| -n * (4.0 * n * n - 9.0 * n + 6.0) / 12.0],
            ],
        ),
        (
            "pp",
            [
                [|n| n.powi(3) * (4.0 * n - 3.0) / 6.0, |n| -n * (8.0 * n.powi(3) - 6.0 * n * n - 6.0 * n + 3.0) / 6.0, |n| n.powi(3) * (4.0 * n - 3.0) / 6.0],
                [|n| -2.0 * n.powi(3) * (2.0 * n - 3.0) / 3.0, |n| 2.0 * n * (4.0 * n.powi(3) - 6.0 * n * n - 3.0 * n + 3.0) / 3.0, |n| -2.0 * n.powi(3) * (2.0 * n - 3.0) / 3.0],
                [|n| n * n * (4.0 * n * n - 9.0 * n + 6.0) / 6.0, |n| -(8.0 * n.powi(4) - 18.0 * n.powi(3) + 6.0 * n * n + 9.0 * n - 3.0) / 6.0, |n| n * n * (4.0 * n * n - 9.0 * n + 6.0) / 6.0],
            ],
        ),
    ]
}

#[test]
fn vertical_edge_tables_match_second_transcription() {
    let mut rng = Lcg(17);
    let mut nus = vec![0.0, 0.25, 0.5];
    nus.extend((0..10).map(|_| 0.5 * rng.next()));
    for nu in nus {
        let (r, l) = stencils_vertical_edge(nu).unwrap();
        for (side, printed) in [(r, printed_right()), (l, printed_left())] {
            for (name, m) in printed {
                let got = match name {
                    "uu" => side.uu,
                    "uv" => side.uv,
                    "up" => side.up,
                    "vv" => side.vv,
                    "vp" => side.vp,
                    _ => side.pp,
                };
                for a in 0..3 {
                    for b in 0..3 {
                        let want = m[a][b](nu);
                        assert!((got[a][b] - want).abs() < 1e-14, "{name}[{a}][{b}] at nu = {nu}: {} vs {want}", got[a][b]);
                    }
                }
            }
            // The printed form uses the same stencil for v <- u as for u <- v.
            assert_eq!(side.uv, side.vu);
        }
    }
}
