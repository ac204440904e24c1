//! Active Flux schemes for the two-dimensional compressible Euler equations
//! on periodic Cartesian grids.
//!
//! The fully discrete update evolves primitive point values at vertices and
//! edge midpoints with a split acoustic/advective operator and advances the
//! conservative cell averages with space-time Simpson fluxes. Two point
//! updates are provided: the additive split ([`Scheme::Rb`]) and the
//! transported acoustic increment update ([`Scheme::RbTai`]). A
//! method-of-lines reference ([`Scheme::SemiDiscrete`]) integrates the same
//! unknowns with SSPRK3.
//!
//! Everything is generic over the floating point type; the aliases at the
//! crate root fix it to `f64`.

pub mod acoustic;
pub mod average;
pub mod error;
pub mod euler;
pub mod grid;
pub mod point_update;
pub mod problems;
pub mod scalar;
pub mod semidiscrete;
pub mod studies;
pub mod vonneumann;

pub use error::{Error, Location, Result};
pub use point_update::Scheme;
pub use scalar::Real;

pub type Primitive = euler::PrimitiveState<f64>;
pub type Conservative = euler::ConservativeState<f64>;
pub type Gas = euler::GasModel<f64>;
pub type Mesh = grid::Mesh<f64>;
pub type Field = grid::DofField<f64>;
