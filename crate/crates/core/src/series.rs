//! Truncated power series on the unit disk.
//!
//! A normalized analytic function is represented by its Taylor coefficients
//! `a_1..a_N` (no constant term, `a_1 = 1` for normalized inputs). This
//! module provides evaluation, differentiation, coefficientwise (Hadamard)
//! convolution, Pochhammer symbols, the prestarlike kernel and the nine
//! integer-coefficient starlike comparison functions.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{index, real, Real};

/// A point of the complex plane, kept as a plain pair so reports serialize
/// as `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> ComplexPoint<T> {
    pub fn new(re: T, im: T) -> Self {
        Self { re, im }
    }
}

impl<T: Real> From<Complex<T>> for ComplexPoint<T> {
    fn from(z: Complex<T>) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl<T: Real> From<ComplexPoint<T>> for Complex<T> {
    fn from(p: ComplexPoint<T>) -> Self {
        Complex::new(p.re, p.im)
    }
}

/// Taylor coefficients `a_1..a_N` of `f(z) = a_1 z + a_2 z^2 + ... + a_N z^N`.
///
/// Coefficients are stored densely starting at `z^1`; there is never a
/// constant term. `a_1 = 1` is required by the coefficient criteria but not
/// by this container, so derived series (signed catalog functions,
/// convolutions, Cesàro means) reuse it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoefficientSequence<T> {
    coeffs: Vec<T>,
}

impl<T: Real> CoefficientSequence<T> {
    /// Wrap a coefficient list `[a_1, a_2, ...]`. Must be nonempty and finite.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(pos) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(pos + 1));
        }
        Ok(Self { coeffs })
    }

    /// Truncation degree `N`.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient `a_k`, `1 <= k <= N`.
    pub fn a(&self, k: usize) -> T {
        self.coeffs[k - 1]
    }

    /// Coefficient `a_k`, or zero past the truncation degree.
    pub fn get(&self, k: usize) -> T {
        if k >= 1 && k <= self.coeffs.len() {
            self.coeffs[k - 1]
        } else {
            T::zero()
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// True iff `a_1 == 1` exactly.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0] == T::one()
    }

    /// True iff every coefficient is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|c| *c > T::zero())
    }

    /// Evaluate `f(z) = sum a_k z^k` by Horner's scheme.
    pub fn evaluate(&self, z: Complex<T>) -> Complex<T> {
        // f(z) = z * (a_1 + z * (a_2 + ...))
        let mut acc = Complex::new(T::zero(), T::zero());
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + Complex::new(c, T::zero());
        }
        acc * z
    }

    /// Coefficient list of `f'`: entry `j` is the coefficient of `z^j`,
    /// i.e. `(j+1) a_{j+1}` for `j = 0..N-1`.
    pub fn derivative(&self) -> Vec<T> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| index::<T>(j + 1) * c)
            .collect()
    }

    /// Coefficientwise product, truncated to the shorter degree.
    pub fn hadamard(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(&a, &b)| a * b)
            .collect();
        Self { coeffs }
    }

    /// Coefficientwise map `a_k -> k a_k`, i.e. the coefficients of `z f'`.
    pub fn alexander_transform(&self) -> Self {
        Self {
            coeffs: self.derivative(),
        }
    }
}

/// Inverse of [`CoefficientSequence::derivative`]: given the coefficients
/// `c_0..c_{N-1}` of a polynomial `p`, returns the sequence whose derivative
/// list is `c` again (coefficient `a_{j+1} = c_j / (j+1)`).
pub fn integrate<T: Real>(derivative_coeffs: &[T]) -> Result<CoefficientSequence<T>> {
    let coeffs = derivative_coeffs
        .iter()
        .enumerate()
        .map(|(j, &c)| c / index::<T>(j + 1))
        .collect();
    CoefficientSequence::new(coeffs)
}

/// Evaluate a plain polynomial `sum c_j z^j` (constant term first) by Horner.
pub fn eval_poly<T: Real>(coeffs: &[T], z: Complex<T>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for &c in coeffs.iter().rev() {
        acc = acc * z + Complex::new(c, T::zero());
    }
    acc
}

/// Pochhammer symbol `(x)_k = x (x+1) ... (x+k-1)`, `(x)_0 = 1`, by forward
/// recurrence. Reports overflow instead of switching representation; callers
/// that need quotients of large symbols use [`pochhammer_ratio`].
pub fn pochhammer<T: Real>(x: T, k: usize) -> Result<T> {
    let mut acc = T::one();
    for j in 0..k {
        acc = acc * (x + index(j));
        if !acc.is_finite() {
            return Err(Error::Overflow("pochhammer"));
        }
    }
    Ok(acc)
}

/// Stable evaluation of `(x)_k / (y)_k` as a product of factor ratios,
/// multiplying before dividing so integer-valued telescoping products stay
/// exact. Neither Pochhammer symbol is formed on its own.
pub fn pochhammer_ratio<T: Real>(x: T, y: T, k: usize) -> Result<T> {
    let mut acc = T::one();
    for j in 0..k {
        let den = y + index(j);
        if den == T::zero() {
            return Err(Error::Pole { offset: j });
        }
        acc = acc * (x + index(j)) / den;
        if !acc.is_finite() {
            return Err(Error::Overflow("pochhammer_ratio"));
        }
    }
    Ok(acc)
}

/// Coefficients of the prestarlike kernel `z / (1-z)^{2-2g}` to degree `n`:
/// coefficient `k` is `(2-2g)_{k-1} / (k-1)!`, built by the ratio recurrence
/// `c_{k+1} = c_k (k+1-2g) / k`.
pub fn prestar_kernel<T: Real>(gamma: T, n: usize) -> Result<CoefficientSequence<T>> {
    if gamma < T::zero() || gamma >= T::one() {
        return Err(Error::Domain(format!(
            "prestarlike order must lie in [0,1), got {gamma}"
        )));
    }
    let two_gamma = real::<T>(2.0) * gamma;
    let mut coeffs = Vec::with_capacity(n);
    let mut c = T::one();
    coeffs.push(c);
    for k in 1..n {
        c = c * (index::<T>(k + 1) - two_gamma) / index(k);
        coeffs.push(c);
    }
    CoefficientSequence::new(coeffs)
}

/// The nine starlike univalent functions with integer Taylor coefficients.
///
/// Coefficients come from closed-form rules (geometric patterns and the
/// period-6 recurrences), never from runtime polynomial division, so they
/// are exact integers at every degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StarlikeFunction {
    /// z
    Identity,
    /// z/(1-z)
    Geometric,
    /// z/(1+z)
    GeometricNeg,
    /// z/(1-z^2)
    OddGeometric,
    /// z/(1+z^2)
    OddGeometricNeg,
    /// z/(1-z)^2
    Koebe,
    /// z/(1+z)^2
    KoebeNeg,
    /// z/(1-z+z^2)
    SixPeriodic,
    /// z/(1+z+z^2)
    SixPeriodicNeg,
}

impl StarlikeFunction {
    pub const ALL: [StarlikeFunction; 9] = [
        StarlikeFunction::Identity,
        StarlikeFunction::Geometric,
        StarlikeFunction::GeometricNeg,
        StarlikeFunction::OddGeometric,
        StarlikeFunction::OddGeometricNeg,
        StarlikeFunction::Koebe,
        StarlikeFunction::KoebeNeg,
        StarlikeFunction::SixPeriodic,
        StarlikeFunction::SixPeriodicNeg,
    ];

    /// Canonical formula string, also accepted by `FromStr`.
    pub fn formula(self) -> &'static str {
        match self {
            StarlikeFunction::Identity => "z",
            StarlikeFunction::Geometric => "z/(1-z)",
            StarlikeFunction::GeometricNeg => "z/(1+z)",
            StarlikeFunction::OddGeometric => "z/(1-z^2)",
            StarlikeFunction::OddGeometricNeg => "z/(1+z^2)",
            StarlikeFunction::Koebe => "z/(1-z)^2",
            StarlikeFunction::KoebeNeg => "z/(1+z)^2",
            StarlikeFunction::SixPeriodic => "z/(1-z+z^2)",
            StarlikeFunction::SixPeriodicNeg => "z/(1+z+z^2)",
        }
    }

    /// Integer coefficient of `z^k`, `k >= 1`.
    pub fn coeff_rule(self, k: usize) -> i64 {
        match self {
            StarlikeFunction::Identity => i64::from(k == 1),
            StarlikeFunction::Geometric => 1,
            StarlikeFunction::GeometricNeg => {
                if k % 2 == 1 {
                    1
                } else {
                    -1
                }
            }
            StarlikeFunction::OddGeometric => i64::from(k % 2 == 1),
            StarlikeFunction::OddGeometricNeg => match k % 4 {
                1 => 1,
                3 => -1,
                _ => 0,
            },
            StarlikeFunction::Koebe => k as i64,
            StarlikeFunction::KoebeNeg => {
                if k % 2 == 1 {
                    k as i64
                } else {
                    -(k as i64)
                }
            }
            StarlikeFunction::SixPeriodic => match k % 6 {
                1 | 2 => 1,
                4 | 5 => -1,
                _ => 0,
            },
            StarlikeFunction::SixPeriodicNeg => match k % 3 {
                1 => 1,
                2 => -1,
                _ => 0,
            },
        }
    }

    /// Taylor coefficients to degree `n`.
    pub fn coefficients<T: Real>(self, n: usize) -> Result<CoefficientSequence<T>> {
        let coeffs = (1..=n)
            .map(|k| real(self.coeff_rule(k) as f64))
            .collect();
        CoefficientSequence::new(coeffs)
    }

    /// Closed-form value of `g(z)/z`; nonvanishing for `|z| < 1`.
    pub fn h_value<T: Real>(self, z: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        match self {
            StarlikeFunction::Identity => one,
            StarlikeFunction::Geometric => one / (one - z),
            StarlikeFunction::GeometricNeg => one / (one + z),
            StarlikeFunction::OddGeometric => one / (one - z * z),
            StarlikeFunction::OddGeometricNeg => one / (one + z * z),
            StarlikeFunction::Koebe => {
                let w = one - z;
                one / (w * w)
            }
            StarlikeFunction::KoebeNeg => {
                let w = one + z;
                one / (w * w)
            }
            StarlikeFunction::SixPeriodic => one / (one - z + z * z),
            StarlikeFunction::SixPeriodicNeg => one / (one + z + z * z),
        }
    }

    /// Closed-form value of `g(z)`.
    pub fn g_value<T: Real>(self, z: Complex<T>) -> Complex<T> {
        self.h_value(z) * z
    }
}

impl fmt::Display for StarlikeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

impl FromStr for StarlikeFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        StarlikeFunction::ALL
            .into_iter()
            .find(|f| f.formula() == norm)
            .ok_or_else(|| Error::UnknownFunction(s.to_string()))
    }
}

/// Taylor coefficients to degree `n` of the named catalog function.
pub fn standard_starlike<T: Real>(name: &str, n: usize) -> Result<CoefficientSequence<T>> {
    StarlikeFunction::from_str(name)?.coefficients(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Seq = CoefficientSequence<f64>;

    fn seq(coeffs: &[f64]) -> Seq {
        Seq::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(pochhammer(5.0, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(2.0, 3).unwrap(), 24.0);
        assert_eq!(pochhammer(0.5, 2).unwrap(), 0.75);
    }

    #[test]
    fn pochhammer_overflow_reported() {
        assert_eq!(pochhammer(10.0, 400_usize).unwrap_err(), Error::Overflow("pochhammer"));
    }

    #[test]
    fn pochhammer_ratio_values() {
        // (2)_4 / (1)_4 telescopes to k+1.
        assert_eq!(pochhammer_ratio(2.0, 1.0, 4).unwrap(), 5.0);
        assert_eq!(pochhammer_ratio(3.0, 3.0, 7).unwrap(), 1.0);
        // (1.5)_2 / (0.5)_2 = (1.5*2.5)/(0.5*1.5)
        assert_eq!(pochhammer_ratio(1.5, 0.5, 2).unwrap(), 5.0);
    }

    #[test]
    fn pochhammer_ratio_pole() {
        assert_eq!(
            pochhammer_ratio(1.0, -2.0, 4).unwrap_err(),
            Error::Pole { offset: 2 }
        );
    }

    #[test]
    fn evaluate_identity_and_quadratic() {
        let f = seq(&[1.0]);
        let z = Complex::new(0.5, 0.0);
        assert_eq!(f.evaluate(z), z);

        // z + z^2 at z = 0.5i is 0.5i - 0.25
        let f = seq(&[1.0, 1.0]);
        let v = f.evaluate(Complex::new(0.0, 0.5));
        assert!((v.re + 0.25).abs() < 1e-15);
        assert!((v.im - 0.5).abs() < 1e-15);
    }

    #[test]
    fn derivative_rules() {
        assert_eq!(seq(&[1.0]).derivative(), vec![1.0]);
        let d = seq(&[1.0, 0.5, 1.0 / 3.0]).derivative();
        assert!((d[0] - 1.0).abs() < 1e-15);
        assert!((d[1] - 1.0).abs() < 1e-15);
        assert!((d[2] - 1.0).abs() < 1e-15);
        assert_eq!(seq(&[1.0, 0.25]).derivative(), vec![1.0, 0.5]);
    }

    #[test]
    fn hadamard_with_convolution_identity() {
        let f = seq(&[1.0, 0.25, -0.5, 3.0]);
        let ones = StarlikeFunction::Geometric.coefficients::<f64>(4).unwrap();
        assert_eq!(f.hadamard(&ones), f);
        assert_eq!(
            seq(&[1.0, 2.0, 3.0]).hadamard(&seq(&[1.0, 0.5, 1.0 / 3.0])),
            seq(&[1.0, 1.0, 1.0])
        );
    }

    #[test]
    fn prestar_kernel_special_orders() {
        let half = prestar_kernel(0.5, 6).unwrap();
        assert!(half.coeffs().iter().all(|&c| c == 1.0));

        let koebe = prestar_kernel(0.0, 6).unwrap();
        assert_eq!(koebe.coeffs(), &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);

        let k = prestar_kernel::<f64>(0.25, 3).unwrap();
        assert!((k.a(3) - 1.875).abs() < 1e-15);
    }

    #[test]
    fn prestar_kernel_at_half_is_hadamard_identity() {
        let f = seq(&[1.0, 0.3, 0.07, 0.001]);
        let kernel = prestar_kernel(0.5, 4).unwrap();
        assert_eq!(f.hadamard(&kernel), f);
    }

    #[test]
    fn catalog_coefficients() {
        let odd: Seq = standard_starlike("z/(1-z^2)", 5).unwrap();
        assert_eq!(odd.coeffs(), &[1.0, 0.0, 1.0, 0.0, 1.0]);

        let koebe: Seq = standard_starlike("z/(1-z)^2", 4).unwrap();
        assert_eq!(koebe.coeffs(), &[1.0, 2.0, 3.0, 4.0]);

        let six: Seq = standard_starlike("z/(1-z+z^2)", 7).unwrap();
        assert_eq!(six.coeffs(), &[1.0, 1.0, 0.0, -1.0, -1.0, 0.0, 1.0]);
    }

    #[test]
    fn six_periodic_matches_linear_recurrence() {
        // z/(1-z+z^2): c_k = c_{k-1} - c_{k-2}; z/(1+z+z^2): c_k = -c_{k-1} - c_{k-2}.
        let n = 64;
        for (name, sign) in [("z/(1-z+z^2)", 1.0), ("z/(1+z+z^2)", -1.0)] {
            let f: Seq = standard_starlike(name, n).unwrap();
            let c = f.coeffs();
            assert_eq!(c[0], 1.0);
            assert_eq!(c[1], sign);
            for k in 2..n {
                assert_eq!(c[k], sign * c[k - 1] - c[k - 2], "{name} at k={}", k + 1);
            }
        }
    }

    #[test]
    fn catalog_series_matches_closed_form() {
        let n = 256;
        let z = Complex::new(0.31, -0.44);
        for g in StarlikeFunction::ALL {
            let series = g.coefficients::<f64>(n).unwrap().evaluate(z);
            let closed = g.g_value(z);
            // |z| = 0.538..., tail of the degree-256 truncation is below 1e-60.
            assert!((series - closed).norm() < 1e-12, "{g}");
        }
    }

    #[test]
    fn unknown_catalog_name_is_an_error() {
        assert!(matches!(
            standard_starlike::<f64>("z/(1-2z)", 4),
            Err(Error::UnknownFunction(_))
        ));
    }

    #[test]
    fn alexander_transform_is_koebe_convolution() {
        let f = seq(&[1.0, 0.5, 0.25, 0.125]);
        let koebe = prestar_kernel(0.0, 4).unwrap();
        assert_eq!(f.hadamard(&koebe), f.alexander_transform());
    }

    #[test]
    fn works_with_f32_scalars() {
        let f = CoefficientSequence::<f32>::new(vec![1.0, 0.5]).unwrap();
        let v = f.evaluate(Complex::new(0.5f32, 0.0));
        assert!((v.re - 0.625).abs() < 1e-6);
        assert_eq!(pochhammer(2.0f32, 3).unwrap(), 24.0);
    }
}
