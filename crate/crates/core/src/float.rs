//! Scalar abstraction for the numerical core.
//!
//! All state algebra and integration routines are generic over [`Real`],
//! which is implemented for `f32` and `f64`. The crate root exports `f64`
//! aliases; the chaotic dynamics studied here loses meaningful digits fast,
//! so every shipped experiment runs in double precision.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar underlying amplitudes, times, and observables.
pub trait Real:
    Float + FloatConst + NumAssign + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + NumAssign + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` constant (tolerances, literals) into the working scalar.
#[inline]
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant must be representable in the scalar type")
}
