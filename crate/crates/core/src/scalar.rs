//! Scalar abstraction: everything in this crate is generic over a floating
//! point type implementing [`Real`]. Concrete `f64` aliases live at the
//! crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable throughout the crate: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Convert an `f64` constant into the working scalar type.
///
/// Panics only if `T` cannot represent ordinary finite constants, which
/// no `Real` implementor does.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite f64 constant must be representable")
}

/// Convert a coefficient index into the working scalar type.
#[inline]
pub fn index<T: Real>(k: usize) -> T {
    T::from_usize(k).expect("index must be representable")
}
