//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point type the solver can run on: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Never fails for the supported types.
    #[inline(always)]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in the scalar type")
    }

    #[inline(always)]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Default absolute tolerance for identity checks at this precision.
    fn tolerance() -> Self;
}

impl Real for f32 {
    fn tolerance() -> Self {
        1e-5
    }
}

impl Real for f64 {
    fn tolerance() -> Self {
        1e-12
    }
}

/// Sum in a fixed pairwise order. Results are reproducible for a given
/// input order, independent of thread count.
pub fn pairwise_sum<T: Real>(values: &[T]) -> T {
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().fold(T::zero(), |acc, &x| acc + x);
    }
    let (lo, hi) = values.split_at(values.len() / 2);
    pairwise_sum(lo) + pairwise_sum(hi)
}
