//! Generalized Cesàro means of type `(b-1, c)`.
//!
//! The n-th mean of `f(z) = z + sum a_k z^k` reweights the partial sum:
//!
//! ```text
//! s_n(f, z) = z + sum_{k=2}^{n} (B_{n-k} / B_{n-1}) a_k z^k,
//! B_0 = 1,  B_k = ((1+b-c)/b) * (b)_k / (c)_k,
//! ```
//!
//! with `b + 1 > c > 0`. The choice `b = 1 + delta`, `c = 1` recovers the
//! classical Cesàro mean of order `delta`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{index, Real};
use crate::series::{pochhammer_ratio, CoefficientSequence};

/// Parameters `(b, c, n)` of a generalized Cesàro mean.
///
/// The defining domain is `b + 1 > c > 0`; the coefficient criteria for
/// these means are stricter and additionally demand `b >= c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CesaroParams<T> {
    pub b: T,
    pub c: T,
    pub n: usize,
}

impl<T: Real> CesaroParams<T> {
    pub fn new(b: T, c: T, n: usize) -> Result<Self> {
        if !(c > T::zero() && b + T::one() > c) {
            return Err(Error::Domain(format!(
                "Cesàro parameters need b+1 > c > 0, got b={b}, c={c}"
            )));
        }
        if n < 2 {
            return Err(Error::Domain(format!("Cesàro degree n must be >= 2, got {n}")));
        }
        Ok(Self { b, c, n })
    }

    /// Classical mean of order `delta > -1`, i.e. `b = 1 + delta`, `c = 1`.
    pub fn classical(delta: T, n: usize) -> Result<Self> {
        if delta <= -T::one() {
            return Err(Error::Domain(format!(
                "classical Cesàro order must exceed -1, got {delta}"
            )));
        }
        Self::new(T::one() + delta, T::one(), n)
    }

    /// True iff the §3-style predicates accept these parameters (`b >= c`).
    pub fn in_criteria_domain(&self) -> bool {
        self.b >= self.c && self.c > T::zero()
    }
}

/// The weights `B_0..B_{n-1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CesaroWeights<T> {
    pub values: Vec<T>,
}

/// Compute `B_0..B_{n-1}` for the given parameters. Requires `b > 0` and
/// `c > 0` (both enter as divisors).
pub fn weights<T: Real>(cp: &CesaroParams<T>) -> Result<CesaroWeights<T>> {
    if cp.b <= T::zero() || cp.c <= T::zero() {
        return Err(Error::Domain(format!(
            "weights need b > 0 and c > 0, got b={}, c={}",
            cp.b, cp.c
        )));
    }
    let lead = (T::one() + cp.b - cp.c) / cp.b;
    let mut values = Vec::with_capacity(cp.n);
    values.push(T::one());
    for k in 1..cp.n {
        values.push(lead * pochhammer_ratio(cp.b, cp.c, k)?);
    }
    Ok(CesaroWeights { values })
}

/// The ratio `B_{n-k} / B_{n-1}` as a single stable product
/// `prod_{j=n-k}^{n-2} (c+j)/(b+j)`, never dividing one large weight by
/// another.
fn weight_ratio<T: Real>(cp: &CesaroParams<T>, k: usize) -> T {
    let mut acc = T::one();
    for j in (cp.n - k)..=(cp.n - 2) {
        acc = acc * (cp.c + index(j)) / (cp.b + index(j));
    }
    acc
}

/// Apply the generalized Cesàro mean to `f`; the input must carry at least
/// `n` coefficients. The first output coefficient is exactly `a_1`.
pub fn cesaro_mean<T: Real>(
    f: &CoefficientSequence<T>,
    cp: &CesaroParams<T>,
) -> Result<CoefficientSequence<T>> {
    if f.degree() < cp.n {
        return Err(Error::Length {
            have: f.degree(),
            need: cp.n,
        });
    }
    if cp.b <= T::zero() || cp.c <= T::zero() {
        return Err(Error::Domain(format!(
            "Cesàro mean needs b > 0 and c > 0, got b={}, c={}",
            cp.b, cp.c
        )));
    }
    let mut coeffs = Vec::with_capacity(cp.n);
    coeffs.push(f.a(1));
    for k in 2..=cp.n {
        coeffs.push(weight_ratio(cp, k) * f.a(k));
    }
    CoefficientSequence::new(coeffs)
}

/// Classical Cesàro mean of order `delta`, delegating to [`cesaro_mean`]
/// with `b = 1 + delta`, `c = 1`.
pub fn classical_cesaro<T: Real>(
    f: &CoefficientSequence<T>,
    delta: T,
    n: usize,
) -> Result<CoefficientSequence<T>> {
    cesaro_mean(f, &CesaroParams::classical(delta, n)?)
}

/// Classical Cesàro mean computed through the factorial form
/// `((1+delta)_{n-k}/(n-k)!) * ((n-1)!/(1+delta)_{n-1})`, as a ratio of two
/// binomial-scale products so nothing overflows. Independent arithmetic
/// route kept for cross-checking [`classical_cesaro`].
pub fn classical_cesaro_direct<T: Real>(
    f: &CoefficientSequence<T>,
    delta: T,
    n: usize,
) -> Result<CoefficientSequence<T>> {
    if delta <= -T::one() {
        return Err(Error::Domain(format!(
            "classical Cesàro order must exceed -1, got {delta}"
        )));
    }
    if f.degree() < n {
        return Err(Error::Length {
            have: f.degree(),
            need: n,
        });
    }
    // (1+delta)_m / m! stays near m^delta, comfortably representable.
    let binom = |m: usize| -> Result<T> {
        let mut acc = T::one();
        for j in 0..m {
            acc = acc * (T::one() + delta + index(j)) / (T::one() + index(j));
            if !acc.is_finite() {
                return Err(Error::Overflow("classical_cesaro_direct"));
            }
        }
        Ok(acc)
    };
    let lead = binom(n - 1)?;
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(f.a(1));
    for k in 2..=n {
        coeffs.push(binom(n - k)? / lead * f.a(k));
    }
    CoefficientSequence::new(coeffs)
}
