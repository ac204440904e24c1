//! Ideal-gas Euler state algebra: variable conversions, fluxes and the
//! linearized eigenstructure about a uniform state.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::scalar::Real;

macro_rules! impl_state_ops {
    ($ty:ident { $($f:ident),+ }) => {
        impl<T: Real> Add for $ty<T> {
            type Output = Self;
            #[inline(always)]
            fn add(self, o: Self) -> Self {
                Self { $($f: self.$f + o.$f),+ }
            }
        }
        impl<T: Real> Sub for $ty<T> {
            type Output = Self;
            #[inline(always)]
            fn sub(self, o: Self) -> Self {
                Self { $($f: self.$f - o.$f),+ }
            }
        }
        impl<T: Real> Mul<T> for $ty<T> {
            type Output = Self;
            #[inline(always)]
            fn mul(self, a: T) -> Self {
                Self { $($f: self.$f * a),+ }
            }
        }
        impl<T: Real> Neg for $ty<T> {
            type Output = Self;
            #[inline(always)]
            fn neg(self) -> Self {
                Self { $($f: -self.$f),+ }
            }
        }
        impl<T: Real> AddAssign for $ty<T> {
            #[inline(always)]
            fn add_assign(&mut self, o: Self) {
                $(self.$f += o.$f;)+
            }
        }
        impl<T: Real> SubAssign for $ty<T> {
            #[inline(always)]
            fn sub_assign(&mut self, o: Self) {
                $(self.$f -= o.$f;)+
            }
        }
        impl<T: Real> $ty<T> {
            #[inline(always)]
            pub fn to_array(self) -> [T; 4] {
                [$(self.$f),+]
            }

            #[inline(always)]
            pub fn from_array(a: [T; 4]) -> Self {
                let [$($f),+] = a;
                Self { $($f),+ }
            }

            pub fn zero() -> Self {
                Self::from_array([T::zero(); 4])
            }

            /// Largest componentwise absolute difference.
            pub fn max_abs_diff(self, o: Self) -> T {
                let d = (self - o).to_array();
                d.iter().fold(T::zero(), |m, x| m.max(x.abs()))
            }

            pub fn is_finite(self) -> bool {
                $(self.$f.is_finite())&&+
            }
        }
    };
}

/// Primitive variables `(rho, u, v, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct PrimitiveState<T> {
    pub rho: T,
    pub u: T,
    pub v: T,
    pub p: T,
}

/// Conservative variables `(rho, rho u, rho v, E)`. Also used for fluxes.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ConservativeState<T> {
    pub rho: T,
    pub mx: T,
    pub my: T,
    pub e: T,
}

impl_state_ops!(PrimitiveState { rho, u, v, p });
impl_state_ops!(ConservativeState { rho, mx, my, e });

impl<T: Real> PrimitiveState<T> {
    pub fn new(rho: T, u: T, v: T, p: T) -> Self {
        Self { rho, u, v, p }
    }

    pub fn is_physical(&self) -> bool {
        self.rho > T::zero() && self.p > T::zero() && self.u.is_finite() && self.v.is_finite()
    }

    pub fn validate(self) -> Result<Self> {
        if self.is_physical() {
            Ok(self)
        } else {
            Err(invalid(self.rho, self.p))
        }
    }

    pub fn speed(&self) -> T {
        self.u.hypot(self.v)
    }
}

impl<T: Real> ConservativeState<T> {
    pub fn new(rho: T, mx: T, my: T, e: T) -> Self {
        Self { rho, mx, my, e }
    }
}

fn invalid<T: Real>(rho: T, p: T) -> Error {
    Error::InvalidState { location: Default::default(), rho: rho.as_f64(), p: p.as_f64() }
}

/// Ideal-gas closure `E = p/(gamma-1) + rho |u|^2 / 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GasModel<T> {
    gamma: T,
}

impl<T: Real> GasModel<T> {
    pub fn new(gamma: T) -> Result<Self> {
        if gamma > T::one() && gamma.is_finite() {
            Ok(Self { gamma })
        } else {
            Err(Error::InvalidParameter(format!("gamma must exceed 1, got {gamma}")))
        }
    }

    /// Diatomic gas, `gamma = 1.4`.
    pub fn air() -> Self {
        Self { gamma: T::lit(1.4) }
    }

    #[inline(always)]
    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn prim_to_cons(&self, w: PrimitiveState<T>) -> Result<ConservativeState<T>> {
        let w = w.validate()?;
        Ok(self.prim_to_cons_unchecked(w))
    }

    #[inline(always)]
    pub fn prim_to_cons_unchecked(&self, w: PrimitiveState<T>) -> ConservativeState<T> {
        let half = T::lit(0.5);
        ConservativeState {
            rho: w.rho,
            mx: w.rho * w.u,
            my: w.rho * w.v,
            e: w.p / (self.gamma - T::one()) + half * w.rho * (w.u * w.u + w.v * w.v),
        }
    }

    pub fn cons_to_prim(&self, c: ConservativeState<T>) -> Result<PrimitiveState<T>> {
        if !(c.rho > T::zero()) || !c.is_finite() {
            return Err(invalid(c.rho, T::nan()));
        }
        let u = c.mx / c.rho;
        let v = c.my / c.rho;
        let p = (self.gamma - T::one()) * (c.e - T::lit(0.5) * (c.mx * u + c.my * v));
        if !(p > T::zero()) {
            return Err(invalid(c.rho, p));
        }
        Ok(PrimitiveState { rho: c.rho, u, v, p })
    }

    #[inline(always)]
    pub fn sound_speed(&self, w: &PrimitiveState<T>) -> T {
        (self.gamma * w.p / w.rho).sqrt()
    }

    /// x-directional flux `F = (rho u, rho u^2 + p, rho u v, u (E + p))`.
    #[inline(always)]
    pub fn flux_x(&self, w: &PrimitiveState<T>) -> ConservativeState<T> {
        let energy = self.total_energy(w);
        ConservativeState {
            rho: w.rho * w.u,
            mx: w.rho * w.u * w.u + w.p,
            my: w.rho * w.u * w.v,
            e: w.u * (energy + w.p),
        }
    }

    /// y-directional flux `G = (rho v, rho u v, rho v^2 + p, v (E + p))`.
    #[inline(always)]
    pub fn flux_y(&self, w: &PrimitiveState<T>) -> ConservativeState<T> {
        let energy = self.total_energy(w);
        ConservativeState {
            rho: w.rho * w.v,
            mx: w.rho * w.u * w.v,
            my: w.rho * w.v * w.v + w.p,
            e: w.v * (energy + w.p),
        }
    }

    #[inline(always)]
    pub fn total_energy(&self, w: &PrimitiveState<T>) -> T {
        w.p / (self.gamma - T::one()) + T::lit(0.5) * w.rho * (w.u * w.u + w.v * w.v)
    }

    /// Mathematical entropy density `-rho log(p / rho^gamma)`.
    pub fn entropy_density(&self, w: &PrimitiveState<T>) -> T {
        -w.rho * (w.p / w.rho.powf(self.gamma)).ln()
    }
}

/// Families of linear waves about a uniform state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModeKind {
    Entropy,
    Shear,
    AcousticPlus,
    AcousticMinus,
}

impl ModeKind {
    /// Branch sign `s` of an acoustic family, zero otherwise.
    pub fn branch(self) -> i32 {
        match self {
            ModeKind::AcousticPlus => 1,
            ModeKind::AcousticMinus => -1,
            _ => 0,
        }
    }
}

/// One plane-wave eigenmode `amplitude * r(k) cos(k.x - omega t)` of the
/// Euler equations linearized about a uniform state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearEigenmode<T> {
    pub kind: ModeKind,
    pub k: [T; 2],
    pub amplitude: T,
}

impl<T: Real> LinearEigenmode<T> {
    pub fn new(kind: ModeKind, k: [T; 2], amplitude: T) -> Result<Self> {
        let mode = Self { kind, k, amplitude };
        if kind != ModeKind::Entropy && mode.wavenumber() == T::zero() {
            return Err(Error::ZeroWavevector(kind));
        }
        Ok(mode)
    }

    /// `K = |k|`.
    pub fn wavenumber(&self) -> T {
        self.k[0].hypot(self.k[1])
    }

    /// Unit wavevector; zero for a zero wavevector.
    pub fn direction(&self) -> [T; 2] {
        let kk = self.wavenumber();
        if kk == T::zero() {
            [T::zero(); 2]
        } else {
            [self.k[0] / kk, self.k[1] / kk]
        }
    }

    /// Advective frequency `omega_0 = u0 kx + v0 ky`.
    pub fn advective_frequency(&self, base: &PrimitiveState<T>) -> T {
        base.u * self.k[0] + base.v * self.k[1]
    }

    /// Full frequency: `omega_0` plus `s c0 K` on acoustic branches.
    pub fn frequency(&self, base: &PrimitiveState<T>, gas: &GasModel<T>) -> T {
        let s = T::lit(self.kind.branch() as f64);
        self.advective_frequency(base) + s * gas.sound_speed(base) * self.wavenumber()
    }

    /// Primitive right eigenvector scaled by the amplitude.
    pub fn eigenvector(&self, base: &PrimitiveState<T>, gas: &GasModel<T>) -> PrimitiveState<T> {
        let eps = self.amplitude;
        let [kx, ky] = self.direction();
        match self.kind {
            ModeKind::Entropy => PrimitiveState::new(eps, T::zero(), T::zero(), T::zero()),
            ModeKind::Shear => PrimitiveState::new(T::zero(), -eps * ky, eps * kx, T::zero()),
            ModeKind::AcousticPlus | ModeKind::AcousticMinus => {
                let c0 = gas.sound_speed(base);
                let s = T::lit(self.kind.branch() as f64);
                let z = base.rho * c0;
                PrimitiveState::new(eps / (c0 * c0), s * eps * kx / z, s * eps * ky / z, eps)
            }
        }
    }

    /// Perturbation of the exact linear solution at `(x, y, t)`.
    pub fn perturbation(&self, base: &PrimitiveState<T>, gas: &GasModel<T>, x: T, y: T, t: T) -> PrimitiveState<T> {
        let phase = self.k[0] * x + self.k[1] * y - self.frequency(base, gas) * t;
        self.eigenvector(base, gas) * phase.cos()
    }
}

/// Uniform state plus a superposition of linear eigenmodes, with its exact
/// linear evolution.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearPacket<T> {
    pub base: PrimitiveState<T>,
    pub modes: Vec<LinearEigenmode<T>>,
}

impl<T: Real> LinearPacket<T> {
    pub fn evaluate(&self, gas: &GasModel<T>, x: T, y: T, t: T) -> PrimitiveState<T> {
        self.modes
            .iter()
            .fold(self.base, |acc, m| acc + m.perturbation(&self.base, gas, x, y, t))
    }
}
