//! Scalar field abstraction.
//!
//! Every algebraic type in the crate is generic over a real floating-point
//! field. `f64` is the primary instantiation; `f32` is supported with
//! tolerances floored at a multiple of its machine epsilon.

use core::fmt::{Debug, Display};
use core::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar usable as a multivector coefficient.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal into this field.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar field")
    }

    /// A relative tolerance of `rel`, never tighter than `64·ε` of this field.
    fn tol(rel: f64) -> Self {
        Self::lit(rel).max(Self::epsilon() * Self::lit(64.0))
    }

    /// Smallest magnitude treated as nonzero when every value is tiny.
    fn tiny() -> Self {
        Self::lit(1e-300).max(Self::min_positive_value())
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Relative distance used throughout for approximate equality:
/// `‖a−b‖∞ / max(1, ‖a‖∞, ‖b‖∞)`.
pub fn relative_gap<T: Scalar>(diff_inf: T, a_inf: T, b_inf: T) -> T {
    diff_inf / T::one().max(a_inf).max(b_inf)
}
