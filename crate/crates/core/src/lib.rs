//! Geometric function theory on the unit disk, numerically.
//!
//! The crate has three layers:
//!
//! * power-series plumbing — truncated Taylor coefficients, Hadamard
//!   convolution, Pochhammer ratios, the prestarlike kernel, the nine
//!   integer-coefficient starlike comparison functions, and generalized
//!   Cesàro means ([`series`], [`cesaro`]);
//! * sufficient coefficient criteria — weighted monotone chains on the
//!   coefficients that certify a partial sum (or its Cesàro mean) as
//!   starlike, convex, close-to-convex or prestarlike of a given order,
//!   built on positivity of Vietoris-type cosine and sine sums
//!   ([`criteria`], [`trig`]);
//! * independent verifiers — grid sampling of the defining functionals
//!   (`Re zf'/f`, `Re(1 + zf''/f')`, ...) over circles inside the disk, so
//!   every criterion's prediction can be cross-checked numerically
//!   ([`verify`]).
//!
//! All numeric code is generic over the scalar type through
//! [`scalar::Real`]; the type aliases at the crate root fix `f64`, which is
//! what the command-line tools and the test suites use.

pub mod cesaro;
pub mod criteria;
pub mod error;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` aliases for the main domain types.
pub type Coeffs = series::CoefficientSequence<f64>;
pub type Point = series::ComplexPoint<f64>;
pub type TrigCoeffs = trig::TrigCoefficients<f64>;
pub type Scan = trig::PositivityResult<f64>;
pub type Grid = verify::DiskGrid<f64>;
pub type Report = verify::ClassReport<f64>;
pub type Criterion = criteria::CriterionReport<f64>;
pub type Weights = criteria::Params<f64>;
pub type CesaroMean = cesaro::CesaroParams<f64>;
