//! Seeded random input generators for the reproduction suites.
//!
//! Each `*_admissible` constructor builds inputs that satisfy the
//! corresponding coefficient criterion by saturating every inequality link
//! with a uniform factor `u` in `(0, 1]`, so the criteria hold by
//! construction and the class verifiers can be cross-checked against them.
//! All generators work on `f64`; they feed harness code, not the core math.

use rand::Rng;

use crate::cesaro::CesaroParams;
use crate::criteria::Params;
use crate::error::Result;
use crate::series::CoefficientSequence;

type Seq = CoefficientSequence<f64>;

fn unit<R: Rng>(rng: &mut R) -> f64 {
    // Uniform on (0, 1].
    1.0 - rng.gen::<f64>()
}

/// Weight parameters with `lambda + mu` in `[1, max_sum]` and
/// `alpha, beta` admissible for the Cesàro criteria.
pub fn random_cesaro_params<R: Rng>(rng: &mut R, max_sum: f64) -> Params<f64> {
    let s = rng.gen_range(1.0..max_sum);
    let lambda = s * rng.gen::<f64>();
    let mu = s - lambda;
    let alpha = rng.gen::<f64>() * 6.0 / (lambda + 4.0);
    let beta = rng.gen::<f64>() * 6.0 / (mu + 4.0);
    Params::new(alpha, beta, lambda, mu)
}

/// Weight parameters for the chain condition, `lambda + mu` in `[1, 2]`,
/// `alpha, beta` in `[0, 2]`.
pub fn random_chain_params<R: Rng>(rng: &mut R) -> (f64, f64, f64, f64) {
    let s = rng.gen_range(1.0..2.0);
    let lambda = s * rng.gen::<f64>();
    (
        rng.gen_range(0.0..2.0),
        rng.gen_range(0.0..2.0),
        lambda,
        s - lambda,
    )
}

/// Positive sequence satisfying the weighted chain
/// `w_{k+1} a_{k+1} <= w_k a_k <= ... <= w_2 a_2 <= a_1 = 1` (for `a_0 = 2`):
/// each step multiplies by the admissible weight ratio and a fresh `u`.
pub fn chain_sequence<R: Rng>(
    alpha: f64,
    beta: f64,
    lambda: f64,
    mu: f64,
    n: usize,
    rng: &mut R,
) -> Vec<f64> {
    let w = |k: usize| (k as f64 + alpha).powf(lambda) * (k as f64 + beta).powf(mu);
    let mut a = Vec::with_capacity(n);
    a.push(1.0);
    for k in 1..n {
        let prev_w = if k == 1 { 1.0 } else { w(k) };
        let next = a[k - 1] * prev_w / w(k + 1) * unit(rng);
        a.push(next);
    }
    a
}

/// Random positive coefficient polynomial with `a_1 = 1` and mixed decay.
pub fn random_positive_polynomial<R: Rng>(max_degree: usize, rng: &mut R) -> Seq {
    let n = rng.gen_range(1..=max_degree);
    let scale = rng.gen_range(0.05..2.0);
    let decay = rng.gen_range(0.5..2.5);
    let mut coeffs = vec![1.0];
    for k in 2..=n {
        coeffs.push(scale * (k as f64).powf(-decay) * unit(rng));
    }
    Seq::new(coeffs).expect("positive coefficients")
}

/// Unconstrained positive sequence: step ratios in `(0, 1.2]`, so roughly
/// half the samples violate any given monotone chain.
pub fn random_positive_sequence<R: Rng>(n: usize, rng: &mut R) -> Seq {
    let mut coeffs = vec![1.0];
    for _ in 2..=n {
        let prev = *coeffs.last().expect("nonempty");
        coeffs.push(prev * 1.2 * unit(rng));
    }
    Seq::new(coeffs).expect("positive coefficients")
}

/// Sequence saturating the starlike criterion at order `gamma`; with
/// `boundary` every link is an exact equality.
pub fn starlike_admissible<R: Rng>(
    p: &Params<f64>,
    gamma: f64,
    n: usize,
    boundary: bool,
    rng: &mut R,
) -> Seq {
    let u = |rng: &mut R| if boundary { 1.0 } else { unit(rng) };
    let mut a = vec![1.0];
    if n >= 2 {
        a.push(u(rng) * (1.0 - gamma) / (2.0 - gamma));
    }
    if n >= 3 {
        a.push(u(rng) * (2.0 - gamma) * a[1] / ((3.0 - gamma) * p.weight(2)));
    }
    for k in 2..=n.saturating_sub(2) {
        let bound = p.weight_ratio(k) * (k as f64 + 1.0 - gamma) * a[k] / (k as f64 + 2.0 - gamma);
        a.push(u(rng) * bound);
    }
    Seq::new(a).expect("positive coefficients")
}

/// Sequence saturating the close-to-convexity chain on `k a_k`.
pub fn ctc_admissible<R: Rng>(p: &Params<f64>, n: usize, rng: &mut R) -> Seq {
    let mut a = vec![1.0];
    let mut element = 1.0; // chain element: a_1, then w_j j a_j
    for j in 2..=n {
        element *= unit(rng);
        a.push(element / (p.weight(j) * j as f64));
    }
    Seq::new(a).expect("positive coefficients")
}

/// Sequence saturating the prestarlike criterion at order `gamma`.
pub fn prestarlike_admissible<R: Rng>(
    p: &Params<f64>,
    gamma: f64,
    n: usize,
    rng: &mut R,
) -> Seq {
    let mut a = vec![1.0];
    if n >= 2 {
        a.push(unit(rng) / (2.0 * (2.0 - gamma)));
    }
    if n >= 3 {
        a.push(
            unit(rng) * 2.0 * (2.0 - gamma) * a[1]
                / (p.weight(2) * (3.0 - gamma) * (3.0 - 2.0 * gamma)),
        );
    }
    for k in 2..=n.saturating_sub(2) {
        let kf = k as f64;
        let bound = p.weight(k) * (kf + 1.0 - gamma) * (kf + 1.0) * a[k]
            / (p.weight(k + 1) * (kf + 2.0 - gamma) * (kf + 2.0 - 2.0 * gamma));
        a.push(unit(rng) * bound);
    }
    Seq::new(a).expect("positive coefficients")
}

/// Cesàro environment: degree, `c` and `b >= c` with headroom.
fn random_cesaro_env<R: Rng>(rng: &mut R) -> Result<CesaroParams<f64>> {
    let n = rng.gen_range(5..=50);
    let c = rng.gen_range(0.3..2.0);
    let b = c + rng.gen_range(0.0..3.0 * n as f64);
    CesaroParams::new(b, c, n)
}

/// Input satisfying the close-to-convexity criterion for the Cesàro mean.
/// The construction also saturates the link between the stated middle range
/// and the final condition, so the full underlying chain holds.
pub fn cesaro_ctc_admissible<R: Rng>(
    rng: &mut R,
) -> Result<(Seq, CesaroParams<f64>, Params<f64>)> {
    let p = random_cesaro_params(rng, 1.9);
    let cp = random_cesaro_env(rng)?;
    let (b, c, n) = (cp.b, cp.c, cp.n as f64);
    let mut a = vec![1.0];
    // gating
    a.push(unit(rng) * (b + n - 2.0) / (2.0 * (c + n - 2.0)));
    // (i)
    a.push(
        unit(rng) * (2.0 - p.alpha * p.lambda) * (2.0 - p.beta * p.mu) * (b + n - 3.0) * a[1]
            / (2f64.powf(p.lambda + p.mu + 1.0) * (c + n - 3.0) * 3.0),
    );
    // (ii) over the stated range plus the bridging k = n-2 link
    for k in 3..=cp.n - 2 {
        let kf = k as f64;
        let bound = (kf - 1.0 + p.alpha - p.lambda)
            * (kf - 1.0 + p.beta - p.mu)
            * (b + n - kf - 1.0)
            * kf
            * a[k - 1]
            / ((kf - 1.0 + p.alpha) * (kf - 1.0 + p.beta) * (c + n - kf - 1.0) * (kf + 1.0));
        a.push(unit(rng) * bound);
    }
    // (iii)
    let nf = n;
    let bound = (nf - 2.0 + p.alpha - p.lambda)
        * (nf - 2.0 + p.beta - p.mu)
        * (1.0 + b - c)
        * (nf - 1.0)
        * a[cp.n - 2]
        / ((nf - 2.0 + p.alpha) * (nf - 2.0 + p.beta) * c * nf);
    a.push(unit(rng) * bound);
    Ok((Seq::new(a)?, cp, p))
}

/// Input satisfying the Cesàro `Re f' > gamma` criterion, with a compliant
/// random order.
pub fn cesaro_r_gamma_admissible<R: Rng>(
    rng: &mut R,
) -> Result<(Seq, CesaroParams<f64>, Params<f64>, f64)> {
    let (a, cp, p) = cesaro_ctc_admissible(rng)?;
    let bound = crate::criteria::cesaro_r_gamma_bound(&a, &cp)?;
    let gamma = (rng.gen::<f64>() * bound).clamp(0.0, 0.999);
    Ok((a, cp, p, gamma))
}

/// Input satisfying the order `lambda + mu - 1/2` starlikeness criterion;
/// the weight sum stays below 1.5 so the derived order stays below 1.
pub fn cesaro_starlike_half_admissible<R: Rng>(
    rng: &mut R,
) -> Result<(Seq, CesaroParams<f64>, Params<f64>)> {
    let p = random_cesaro_params(rng, 1.45);
    let cp = random_cesaro_env(rng)?;
    let (b, c, n) = (cp.b, cp.c, cp.n as f64);
    let s = p.lambda + p.mu;
    let mut a = vec![1.0];
    a.push(unit(rng) * (3.0 - 2.0 * s) * (b + n - 2.0) / ((5.0 - 2.0 * s) * (c + n - 2.0)));
    a.push(
        unit(rng)
            * (2.0 - p.alpha * p.lambda)
            * (2.0 - p.beta * p.mu)
            * (5.0 - 2.0 * s)
            * (b + n - 3.0)
            * a[1]
            / (2f64.powf(s + 2.0) * (7.0 - 2.0 * s) * (c + n - 3.0)),
    );
    for k in 3..=cp.n - 2 {
        let kf = k as f64;
        let bound = (2.0 * kf + 1.0 - 2.0 * s)
            * (kf - 1.0 + p.alpha - p.lambda)
            * (kf - 1.0 + p.beta - p.mu)
            * (b + n - kf - 1.0)
            * a[k - 1]
            / ((2.0 * kf + 3.0 - 2.0 * s) * (kf - 1.0 + p.alpha) * (kf - 1.0 + p.beta)
                * (c + n - kf - 1.0));
        a.push(unit(rng) * bound);
    }
    let bound = (n - 2.0 + p.alpha - p.lambda)
        * (n - 2.0 + p.beta - p.mu)
        * (2.0 * n + 1.0 - 2.0 * s)
        * (1.0 + b - c)
        * a[cp.n - 2]
        / ((n - 2.0 + p.alpha) * (n - 2.0 + p.beta) * (2.0 * n + 3.0 - 2.0 * s) * c);
    a.push(unit(rng) * bound);
    Ok((Seq::new(a)?, cp, p))
}

/// Parameters placing the Cesàro polynomial itself in the prestarlike class
/// of a random order: `b` is pushed above every stated lower bound.
pub fn cesaro_prestarlike_admissible<R: Rng>(
    rng: &mut R,
) -> Result<(CesaroParams<f64>, Params<f64>, f64)> {
    let p = random_cesaro_params(rng, 1.9);
    let gamma = rng.gen_range(0.0..0.9);
    let n = rng.gen_range(5usize..=50);
    let c: f64 = rng.gen_range(0.3..2.0);
    let nf = n as f64;

    let mut b_min = c;
    // (1)
    b_min = b_min.max(2.0 * (2.0 - gamma) * (c + nf - 2.0) - (nf - 2.0));
    // (2)
    b_min = b_min.max(
        p.weight(2) * (3.0 - gamma) * (3.0 - 2.0 * gamma) * (c + nf - 3.0)
            / (2.0 * (2.0 - gamma))
            - (nf - 3.0),
    );
    // (3)
    for k in 2..=n - 3 {
        let kf = k as f64;
        b_min = b_min.max(
            p.weight(k + 1) * (kf + 2.0 - gamma) * (kf + 2.0 - 2.0 * gamma) * (c + nf - kf - 2.0)
                / (p.weight(k) * (kf + 1.0 - gamma) * (kf + 1.0))
                - (nf - kf - 2.0),
        );
    }
    // (4)
    b_min = b_min.max(
        p.weight(n - 1) * (nf - gamma) * (nf - 2.0 * gamma) * c
            / (p.weight(n - 2) * (nf - 1.0 - gamma) * (nf - 1.0))
            + c
            - 1.0,
    );

    let b = b_min + rng.gen_range(0.0..5.0);
    Ok((CesaroParams::new(b, c, n)?, p, gamma))
}

/// Input satisfying the criterion for close-to-convexity of the Cesàro mean
/// with respect to `z/(1-z^2)`.
pub fn cesaro_ctc_odd_admissible<R: Rng>(
    rng: &mut R,
) -> Result<(Seq, CesaroParams<f64>, Params<f64>)> {
    let p = random_cesaro_params(rng, 1.9);
    let cp = random_cesaro_env(rng)?;
    let (b, c, n) = (cp.b, cp.c, cp.n as f64);
    let mut a = vec![1.0];
    a.push(
        unit(rng) * (2.0 - p.alpha * p.lambda) * (2.0 - p.beta * p.mu) * (b + n - 2.0)
            / ((c + n - 2.0) * 2f64.powf(p.lambda + p.mu + 3.0)),
    );
    for k in 2..=cp.n - 2 {
        let kf = k as f64;
        let bound = kf
            * (kf + p.alpha - p.lambda)
            * (kf + p.beta - p.mu)
            * (b + n - kf - 1.0)
            * a[k - 1]
            / ((kf + p.alpha) * (kf + p.beta) * (c + n - kf - 1.0) * (kf + 1.0));
        a.push(unit(rng) * bound);
    }
    let bound = (n - 1.0 + p.alpha - p.lambda)
        * (n - 1.0 + p.beta - p.mu)
        * (1.0 + b - c)
        * (n - 1.0)
        * a[cp.n - 2]
        / (c * (n - 1.0 + p.alpha) * (n - 1.0 + p.beta) * n);
    a.push(unit(rng) * bound);
    Ok((Seq::new(a)?, cp, p))
}
