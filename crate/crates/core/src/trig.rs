//! Positive trigonometric sums.
//!
//! Generalized-Vietoris coefficient generation, the monotone weighted chain
//! condition that transfers positivity to arbitrary coefficient sequences,
//! and numerical minimum scans of cosine/sine partial sums over `(0, pi)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{index, real, Real};

/// Coefficients `b_0; b_1..b_n` of the sums
/// `b_0/2 + sum b_k cos(k t)` and `sum b_k sin(k t)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrigCoefficients<T> {
    pub b0: T,
    pub b: Vec<T>,
}

impl<T: Real> TrigCoefficients<T> {
    pub fn new(b0: T, b: Vec<T>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::Empty);
        }
        if !b0.is_finite() {
            return Err(Error::NonFinite(0));
        }
        if let Some(pos) = b.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(pos + 1));
        }
        Ok(Self { b0, b })
    }

    /// Degree `n` of the trigonometric polynomial.
    pub fn degree(&self) -> usize {
        self.b.len()
    }
}

/// Weight `(k+alpha)^lambda (k+beta)^mu` used by every chain condition.
pub(crate) fn chain_weight<T: Real>(k: usize, alpha: T, beta: T, lambda: T, mu: T) -> T {
    (index::<T>(k) + alpha).powf(lambda) * (index::<T>(k) + beta).powf(mu)
}

fn validate_weight_params<T: Real>(alpha: T, beta: T, lambda: T, mu: T) -> Result<()> {
    if alpha < T::zero() || beta < T::zero() || lambda < T::zero() || mu < T::zero() {
        return Err(Error::Domain(format!(
            "weight parameters must be nonnegative, got alpha={alpha}, beta={beta}, lambda={lambda}, mu={mu}"
        )));
    }
    if lambda + mu < T::one() {
        return Err(Error::Domain(format!(
            "need lambda + mu >= 1, got {}",
            lambda + mu
        )));
    }
    Ok(())
}

/// Generalized Vietoris coefficients: `b_0 = 2`, `b_1 = 1` and
/// `b_k = (k+alpha)^-lambda (k+beta)^-mu` for `2 <= k <= n`.
///
/// Requires `alpha, beta, lambda, mu >= 0` and `lambda + mu >= 1`; both the
/// cosine and sine sums with these coefficients are positive on `(0, pi)`.
pub fn vietoris_general_coeffs<T: Real>(
    alpha: T,
    beta: T,
    lambda: T,
    mu: T,
    n: usize,
) -> Result<TrigCoefficients<T>> {
    validate_weight_params(alpha, beta, lambda, mu)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let mut b = Vec::with_capacity(n);
    b.push(T::one());
    for k in 2..=n {
        b.push(chain_weight(k, alpha, beta, lambda, mu).recip());
    }
    TrigCoefficients::new(real(2.0), b)
}

/// One inequality of the weighted chain, recorded as `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainLink<T> {
    /// Index of the coefficient on the left side (1 means `a_1 <= a_0/2`).
    pub k: usize,
    pub lhs: T,
    pub rhs: T,
    pub ok: bool,
}

/// Outcome of [`check_chain_condition`]: every adjacent link of the chain
/// with its two side values; violations are content, not errors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport<T> {
    pub links: Vec<ChainLink<T>>,
    pub satisfied: bool,
}

impl<T: Real> ChainReport<T> {
    /// Links that failed, in index order.
    pub fn violations(&self) -> impl Iterator<Item = &ChainLink<T>> {
        self.links.iter().filter(|l| !l.ok)
    }
}

// Chain links hold with exact equality for the Vietoris coefficients, so a
// strict float comparison would reject valid inputs.
fn leq_chain<T: Real>(lhs: T, rhs: T) -> bool {
    let eps = real::<T>(1e-12);
    lhs <= rhs * (T::one() + eps) + eps
}

/// Check the monotone weighted chain
/// `w_{k+1} a_{k+1} <= w_k a_k <= ... <= w_2 a_2 <= a_1 <= a_0/2`
/// with `w_k = (k+alpha)^lambda (k+beta)^mu`.
pub fn check_chain_condition<T: Real>(
    a0: T,
    a: &[T],
    alpha: T,
    beta: T,
    lambda: T,
    mu: T,
) -> Result<ChainReport<T>> {
    validate_weight_params(alpha, beta, lambda, mu)?;
    if a.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(pos) = a.iter().position(|&x| !(x > T::zero())) {
        return Err(Error::Domain(format!(
            "chain condition needs positive coefficients, a_{} = {}",
            pos + 1,
            a[pos]
        )));
    }

    let mut links = Vec::with_capacity(a.len());
    let half_a0 = a0 / real(2.0);
    links.push(ChainLink {
        k: 1,
        lhs: a[0],
        rhs: half_a0,
        ok: leq_chain(a[0], half_a0),
    });
    let mut prev = a[0]; // w_1 a_1 with w_1 = 1
    for k in 2..=a.len() {
        let weighted = chain_weight(k, alpha, beta, lambda, mu) * a[k - 1];
        links.push(ChainLink {
            k,
            lhs: weighted,
            rhs: prev,
            ok: leq_chain(weighted, prev),
        });
        prev = weighted;
    }
    let satisfied = links.iter().all(|l| l.ok);
    Ok(ChainReport { links, satisfied })
}

/// `b_0/2 + sum_{k=1}^n b_k cos(k theta)`.
pub fn cosine_sum<T: Real>(t: &TrigCoefficients<T>, theta: T) -> T {
    let mut acc = t.b0 / real(2.0);
    for (k, &bk) in t.b.iter().enumerate() {
        acc = acc + bk * (index::<T>(k + 1) * theta).cos();
    }
    acc
}

/// `sum_{k=1}^n b_k sin(k theta)`.
pub fn sine_sum<T: Real>(t: &TrigCoefficients<T>, theta: T) -> T {
    let mut acc = T::zero();
    for (k, &bk) in t.b.iter().enumerate() {
        acc = acc + bk * (index::<T>(k + 1) * theta).sin();
    }
    acc
}

/// Which of the two partial sums a scan evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SumKind {
    Cosine,
    Sine,
}

impl SumKind {
    pub fn evaluate<T: Real>(self, t: &TrigCoefficients<T>, theta: T) -> T {
        match self {
            SumKind::Cosine => cosine_sum(t, theta),
            SumKind::Sine => sine_sum(t, theta),
        }
    }
}

/// Equispaced interior points `theta_j = j pi / (count+1)`, `j = 1..count`.
/// The endpoints `0` and `pi` are never sampled: the sums may vanish there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaGrid {
    pub count: usize,
}

impl ThetaGrid {
    pub fn new(count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::Empty);
        }
        Ok(Self { count })
    }

    /// Default oversampling for a degree-`n` polynomial.
    pub fn for_degree(n: usize) -> Self {
        Self {
            count: (8 * n).max(4096),
        }
    }

    pub fn theta<T: Real>(&self, j: usize) -> T {
        T::PI() * index::<T>(j) / index::<T>(self.count + 1)
    }
}

/// Result of a positivity scan over `(0, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PositivityResult<T> {
    pub min_value: T,
    pub argmin_theta: T,
    pub refined: bool,
    pub positive: bool,
}

const GOLDEN_WIDTH_TOL: f64 = 1e-10;
const GOLDEN_MAX_ITERS: usize = 200;

/// Golden-section minimization on `[lo, hi]`; returns the best interior
/// point found. Plain bisection ratios, no derivative needed.
fn golden_section<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T) -> (T, T) {
    let inv_phi = real::<T>(0.618_033_988_749_894_9);
    let tol = real::<T>(GOLDEN_WIDTH_TOL);

    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let (mut best_x, mut best_f) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };

    for _ in 0..GOLDEN_MAX_ITERS {
        if hi - lo < tol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        let (x, fx) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
        if fx < best_f || (fx == best_f && x < best_x) {
            best_x = x;
            best_f = fx;
        }
    }
    (best_x, best_f)
}

/// Scan the chosen partial sum over the grid and refine around the smallest
/// value with a golden-section search.
///
/// Requires `grid.count >= 8 * degree` so the oscillations of the degree-`n`
/// polynomial are resolved. Refinement stays inside the span
/// `[theta_1, theta_count]` of the open grid; reported minima are minima
/// over that span, deterministic with ties broken toward smaller `theta`.
pub fn positivity_scan<T: Real>(
    t: &TrigCoefficients<T>,
    kind: SumKind,
    grid: ThetaGrid,
) -> Result<PositivityResult<T>> {
    let degree = t.degree();
    let required = 8 * degree;
    if grid.count < required {
        return Err(Error::GridTooCoarse {
            count: grid.count,
            degree,
            required,
        });
    }

    let eval = |theta: T| kind.evaluate(t, theta);

    let mut best_j = 1;
    let mut best_theta = grid.theta::<T>(1);
    let mut best_value = eval(best_theta);
    for j in 2..=grid.count {
        let theta = grid.theta::<T>(j);
        let value = eval(theta);
        if value < best_value {
            best_j = j;
            best_theta = theta;
            best_value = value;
        }
    }

    let lo = grid.theta::<T>(best_j.saturating_sub(1).max(1));
    let hi = grid.theta::<T>((best_j + 1).min(grid.count));
    let refined = hi > lo;
    if refined {
        let (x, fx) = golden_section(eval, lo, hi);
        if fx < best_value || (fx == best_value && x < best_theta) {
            best_theta = x;
            best_value = fx;
        }
    }

    Ok(PositivityResult {
        min_value: best_value,
        argmin_theta: best_theta,
        refined,
        positive: best_value > T::zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    #[test]
    fn vietoris_reduces_to_reciprocals() {
        let t = vietoris_general_coeffs(0.0, 0.0, 1.0, 0.0, 4).unwrap();
        assert_eq!(t.b0, 2.0);
        assert_eq!(t.b, vec![1.0, 0.5, 1.0 / 3.0, 0.25]);
    }

    #[test]
    fn vietoris_square_root_weights() {
        let t = vietoris_general_coeffs::<f64>(1.0, 1.0, 0.5, 0.5, 3).unwrap();
        assert!((t.b[1] - 1.0 / 3.0).abs() < 1e-15);
        assert!((t.b[2] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn vietoris_mixed_exponents() {
        let t = vietoris_general_coeffs::<f64>(0.5, 2.0, 1.0, 0.5, 2).unwrap();
        assert!((t.b[1] - 0.2).abs() < 1e-15);
    }

    #[test]
    fn vietoris_rejects_bad_parameters() {
        assert!(matches!(
            vietoris_general_coeffs(0.0, 0.0, 0.4, 0.4, 3),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            vietoris_general_coeffs(-0.1, 0.0, 1.0, 0.0, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn chain_failure_at_second_link() {
        let r = check_chain_condition::<f64>(2.0, &[1.0, 0.5, 1.0 / 9.0, 1.0 / 16.0], 0.0, 0.0, 2.0, 0.0)
            .unwrap();
        assert!(!r.satisfied);
        let bad: Vec<usize> = r.violations().map(|l| l.k).collect();
        assert_eq!(bad, vec![2]);
        let link = &r.links[1];
        assert!((link.lhs - 2.0).abs() < 1e-15);
        assert!((link.rhs - 1.0).abs() < 1e-15);
    }

    #[test]
    fn chain_equalities_pass() {
        let t = vietoris_general_coeffs(0.7, 0.2, 1.2, 0.3, 20).unwrap();
        let r = check_chain_condition(t.b0, &t.b, 0.7, 0.2, 1.2, 0.3).unwrap();
        assert!(r.satisfied);
    }

    #[test]
    fn chain_strictly_decreasing_passes() {
        let r = check_chain_condition::<f64>(2.0, &[1.0, 0.1, 0.01], 1.0, 1.0, 1.0, 0.0).unwrap();
        assert!(r.satisfied);
    }

    #[test]
    fn chain_rejects_nonpositive_coefficients() {
        assert!(matches!(
            check_chain_condition(2.0, &[1.0, 0.0], 0.0, 0.0, 1.0, 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sums_at_known_angles() {
        let t = TrigCoefficients::new(2.0, vec![1.0]).unwrap();
        assert!((sine_sum(&t, PI / 2.0) - 1.0).abs() < 1e-15);

        // Constant-term-only cosine sum: pin the degree-1 coefficient to zero.
        let t = TrigCoefficients::<f64>::new(2.0, vec![0.0]).unwrap();
        assert!((cosine_sum(&t, 1.234) - 1.0).abs() < 1e-15);

        let t = vietoris_general_coeffs(0.0, 0.0, 1.0, 0.0, 3).unwrap();
        let expected = 1.5 * (3.0f64.sqrt() / 2.0);
        assert!((sine_sum(&t, PI / 3.0) - expected).abs() < 1e-12);
    }

    #[test]
    fn odd_harmonic_sine_symmetry() {
        let t = TrigCoefficients::new(2.0, vec![1.0, 0.0, 0.4, 0.0, 0.21]).unwrap();
        for &theta in &[0.3, 0.9, 1.4, 2.2] {
            let d = (sine_sum(&t, PI - theta) - sine_sum(&t, theta)).abs();
            assert!(d < 1e-12, "theta={theta}: {d}");
        }
    }

    #[test]
    fn scan_positive_for_vietoris_sine() {
        let t = vietoris_general_coeffs(0.0, 0.0, 1.0, 0.0, 10).unwrap();
        let r = positivity_scan(&t, SumKind::Sine, ThetaGrid::for_degree(10)).unwrap();
        assert!(r.positive, "min {} at {}", r.min_value, r.argmin_theta);

        // Dense-grid oracle: no value below zero anywhere.
        let grid = ThetaGrid::new(100_000).unwrap();
        for j in 1..=grid.count {
            assert!(sine_sum(&t, grid.theta::<f64>(j)) > 0.0);
        }
    }

    #[test]
    fn scan_finds_negative_geometric_sine() {
        // sin t + sin 2t = sin t (1 + 2 cos t) < 0 past t = 2pi/3.
        let t = TrigCoefficients::new(2.0, vec![1.0, 1.0]).unwrap();
        let r = positivity_scan(&t, SumKind::Sine, ThetaGrid::for_degree(2)).unwrap();
        assert!(!r.positive);
        assert!(r.min_value < -0.3);
        assert!(r.argmin_theta > 2.0 * PI / 3.0 && r.argmin_theta < PI);
        // Stationary point of sin t (1 + 2 cos t): 4cos^2 t + cos t - 2 = 0.
        let root = ((-1.0 - 33f64.sqrt()) / 8.0).acos();
        assert!((r.argmin_theta - root).abs() < 1e-6);
    }

    #[test]
    fn scan_single_sine_term() {
        let t = TrigCoefficients::new(2.0, vec![1.0]).unwrap();
        let r = positivity_scan(&t, SumKind::Sine, ThetaGrid::for_degree(1)).unwrap();
        assert!(r.positive);
        // Minimum sits at a grid edge, next to one of the excluded endpoints.
        let edge = ThetaGrid::for_degree(1).theta::<f64>(1);
        assert!(r.argmin_theta <= edge * 1.0001 || r.argmin_theta >= PI - edge * 1.0001);
    }

    #[test]
    fn scan_rejects_coarse_grid() {
        let t = vietoris_general_coeffs(0.0, 0.0, 1.0, 0.0, 600).unwrap();
        assert!(matches!(
            positivity_scan(&t, SumKind::Sine, ThetaGrid::new(4096).unwrap()),
            Err(Error::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn scan_stable_under_grid_doubling() {
        // Interior minimum: doubling the grid must not move the refined value.
        let t = TrigCoefficients::<f64>::new(2.0, vec![1.0, 1.0]).unwrap();
        let a = positivity_scan(&t, SumKind::Sine, ThetaGrid::new(4096).unwrap()).unwrap();
        let b = positivity_scan(&t, SumKind::Sine, ThetaGrid::new(8192).unwrap()).unwrap();
        assert!((a.min_value - b.min_value).abs() < 1e-9);

        let t = TrigCoefficients::<f64>::new(3.0, vec![1.0, 0.8, 0.1]).unwrap();
        let a = positivity_scan(&t, SumKind::Cosine, ThetaGrid::new(4096).unwrap()).unwrap();
        let b = positivity_scan(&t, SumKind::Cosine, ThetaGrid::new(8192).unwrap()).unwrap();
        assert!((a.min_value - b.min_value).abs() < 1e-9);
    }
}
