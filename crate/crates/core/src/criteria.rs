//! Coefficient criteria.
//!
//! Each predicate checks a chain of weighted coefficient inequalities that
//! is sufficient for membership of the truncated series (or of its Cesàro
//! mean) in one of the geometric classes. Reports record every inequality
//! as `lhs <= rhs` with both side values, the first failing link, and the
//! class the criterion predicts on success.
//!
//! Comparisons are equality tolerant: `lhs <= rhs` is accepted when
//! `lhs <= rhs + max(1e-12, 1e-12 |rhs|)`, since the canonical example
//! sequences satisfy many links with exact equality.

use serde::Serialize;

use crate::cesaro::CesaroParams;
use crate::error::{Error, Result};
use crate::scalar::{index, real, Real};
use crate::series::CoefficientSequence;
use crate::trig::chain_weight;

/// Weight parameters `(alpha, beta, lambda, mu)` shared by every criterion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params<T> {
    pub alpha: T,
    pub beta: T,
    pub lambda: T,
    pub mu: T,
}

/// Which admissible range to enforce for `alpha` and `beta` in the Cesàro
/// criteria: the stated `6/(lambda+4)` bound, or the looser `6/(lambda+2)`
/// that the underlying series estimates actually need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RangePolicy {
    #[default]
    Statement,
    Proof,
}

impl<T: Real> Params<T> {
    pub fn new(alpha: T, beta: T, lambda: T, mu: T) -> Self {
        Self {
            alpha,
            beta,
            lambda,
            mu,
        }
    }

    /// `alpha, beta, lambda, mu >= 0` and `lambda + mu >= 1`.
    pub fn validate(&self) -> Result<()> {
        if self.alpha < T::zero()
            || self.beta < T::zero()
            || self.lambda < T::zero()
            || self.mu < T::zero()
        {
            return Err(Error::Domain(format!(
                "weight parameters must be nonnegative, got alpha={}, beta={}, lambda={}, mu={}",
                self.alpha, self.beta, self.lambda, self.mu
            )));
        }
        if self.lambda + self.mu < T::one() {
            return Err(Error::Domain(format!(
                "need lambda + mu >= 1, got {}",
                self.lambda + self.mu
            )));
        }
        Ok(())
    }

    /// Additional ranges required by the Cesàro criteria:
    /// `1 <= lambda + mu < 2`, `alpha <= 6/(lambda+d)`, `beta <= 6/(mu+d)`
    /// with `d = 4` under [`RangePolicy::Statement`] and `d = 2` under
    /// [`RangePolicy::Proof`].
    pub fn validate_cesaro(&self, policy: RangePolicy) -> Result<()> {
        self.validate()?;
        let two = real::<T>(2.0);
        if self.lambda + self.mu >= two {
            return Err(Error::Domain(format!(
                "need lambda + mu < 2, got {}",
                self.lambda + self.mu
            )));
        }
        let shift = match policy {
            RangePolicy::Statement => real::<T>(4.0),
            RangePolicy::Proof => two,
        };
        let six = real::<T>(6.0);
        if self.alpha > six / (self.lambda + shift) {
            return Err(Error::Domain(format!(
                "need alpha <= 6/(lambda+{shift}), got alpha={}",
                self.alpha
            )));
        }
        if self.beta > six / (self.mu + shift) {
            return Err(Error::Domain(format!(
                "need beta <= 6/(mu+{shift}), got beta={}",
                self.beta
            )));
        }
        Ok(())
    }

    /// `(k+alpha)^lambda (k+beta)^mu`.
    pub fn weight(&self, k: usize) -> T {
        chain_weight(k, self.alpha, self.beta, self.lambda, self.mu)
    }

    /// `(1 + 1/(k+alpha))^-lambda (1 + 1/(k+beta))^-mu`, the ratio of
    /// consecutive weights.
    pub fn weight_ratio(&self, k: usize) -> T {
        let one = T::one();
        (one + (index::<T>(k) + self.alpha).recip()).powf(-self.lambda)
            * (one + (index::<T>(k) + self.beta).recip()).powf(-self.mu)
    }
}

/// One recorded inequality, always read as `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition<T> {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<T>,
    pub ok: bool,
    pub vacuous: bool,
}

/// Parameter echo carried by every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamsEcho<T> {
    pub alpha: T,
    pub beta: T,
    pub lambda: T,
    pub mu: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

/// Outcome of one criterion evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport<T> {
    pub theorem: String,
    pub params: ParamsEcho<T>,
    /// Hypotheses on the data that gate the criterion (not parameter-range
    /// hypotheses, which are domain errors instead).
    pub gating: Vec<Condition<T>>,
    pub conditions: Vec<Condition<T>>,
    /// Links evaluated beyond the stated index range, recorded for
    /// inspection without influencing `all_satisfied`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extras: Vec<Condition<T>>,
    pub all_satisfied: bool,
    pub predicted_class: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl<T: Real> CriterionReport<T> {
    /// First non-vacuous failing condition (gating first), if any.
    pub fn first_failure(&self) -> Option<&Condition<T>> {
        self.gating
            .iter()
            .chain(self.conditions.iter())
            .find(|c| !c.ok)
    }
}

fn leq_tol<T: Real>(lhs: T, rhs: T) -> bool {
    let eps = real::<T>(1e-12);
    lhs <= rhs + eps.max(eps * rhs.abs())
}

fn cond<T: Real>(label: &str, k: Option<usize>, lhs: T, rhs: T) -> Condition<T> {
    Condition {
        label: label.to_string(),
        k,
        lhs: Some(lhs),
        rhs: Some(rhs),
        ok: leq_tol(lhs, rhs),
        vacuous: false,
    }
}

fn vacuous<T: Real>(label: &str) -> Condition<T> {
    Condition {
        label: label.to_string(),
        k: None,
        lhs: None,
        rhs: None,
        ok: true,
        vacuous: true,
    }
}

fn all_ok<T: Real>(gating: &[Condition<T>], conditions: &[Condition<T>]) -> bool {
    gating.iter().chain(conditions.iter()).all(|c| c.ok)
}

fn echo_plain<T: Real>(p: &Params<T>, gamma: Option<T>) -> ParamsEcho<T> {
    ParamsEcho {
        alpha: p.alpha,
        beta: p.beta,
        lambda: p.lambda,
        mu: p.mu,
        gamma,
        b: None,
        c: None,
        n: None,
    }
}

fn echo_cesaro<T: Real>(p: &Params<T>, gamma: Option<T>, cp: &CesaroParams<T>) -> ParamsEcho<T> {
    ParamsEcho {
        alpha: p.alpha,
        beta: p.beta,
        lambda: p.lambda,
        mu: p.mu,
        gamma,
        b: Some(cp.b),
        c: Some(cp.c),
        n: Some(cp.n),
    }
}

fn validate_sequence<T: Real>(a: &CoefficientSequence<T>) -> Result<()> {
    if !a.is_normalized() {
        return Err(Error::Domain(format!(
            "criteria need a_1 = 1, got a_1 = {}",
            a.a(1)
        )));
    }
    if !a.is_positive() {
        return Err(Error::Domain(
            "criteria need strictly positive coefficients".to_string(),
        ));
    }
    Ok(())
}

fn validate_order<T: Real>(gamma: T) -> Result<()> {
    if gamma < T::zero() || gamma >= T::one() {
        return Err(Error::Domain(format!(
            "order must lie in [0,1), got {gamma}"
        )));
    }
    Ok(())
}

fn validate_cesaro_domain<T: Real>(cp: &CesaroParams<T>) -> Result<()> {
    if !cp.in_criteria_domain() {
        return Err(Error::Domain(format!(
            "Cesàro criteria need b >= c > 0, got b={}, c={}",
            cp.b, cp.c
        )));
    }
    Ok(())
}

fn require_length<T: Real>(a: &CoefficientSequence<T>, n: usize) -> Result<()> {
    if a.degree() < n {
        return Err(Error::Length {
            have: a.degree(),
            need: n,
        });
    }
    Ok(())
}

/// Starlike criterion: for `0 <= gamma < 1` and positive `a_k` with
/// `a_1 = 1`, the conditions
///
/// ```text
/// (1) (2-g) a_2 <= (1-g) a_1
/// (2) (3-g) a_3 <= (2+alpha)^-lambda (2+beta)^-mu (2-g) a_2
/// (3) (k+2-g) a_{k+2} <= (1+1/(k+alpha))^-lambda (1+1/(k+beta))^-mu (k+1-g) a_{k+1}
/// ```
///
/// for `k = 2..N-2` make the partial sum starlike of order `gamma`.
pub fn thm_starlike<T: Real>(
    a: &CoefficientSequence<T>,
    p: &Params<T>,
    gamma: T,
) -> Result<CriterionReport<T>> {
    p.validate()?;
    validate_order(gamma)?;
    validate_sequence(a)?;

    let n = a.degree();
    let one = T::one();
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let mut conditions = Vec::new();

    if n >= 2 {
        conditions.push(cond("(1)", None, (two - gamma) * a.a(2), (one - gamma) * a.a(1)));
    } else {
        conditions.push(vacuous("(1)"));
    }
    if n >= 3 {
        conditions.push(cond(
            "(2)",
            None,
            (three - gamma) * a.a(3),
            (two - gamma) * a.a(2) / p.weight(2),
        ));
    } else {
        conditions.push(vacuous("(2)"));
    }
    if n >= 4 {
        for k in 2..=n - 2 {
            conditions.push(cond(
                "(3)",
                Some(k),
                (index::<T>(k + 2) - gamma) * a.a(k + 2),
                p.weight_ratio(k) * (index::<T>(k + 1) - gamma) * a.a(k + 1),
            ));
        }
    } else {
        conditions.push(vacuous("(3)"));
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "2.2".to_string(),
        params: echo_plain(p, Some(gamma)),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: format!("starlike of order {gamma}"),
        notes: Vec::new(),
    })
}

/// Close-to-convex criterion: the weighted chain on `k a_k`,
///
/// ```text
/// (k+1+alpha)^lambda (k+1+beta)^mu (k+1) a_{k+1}
///   <= (k+alpha)^lambda (k+beta)^mu k a_k <= ... <= (2+alpha)^lambda (2+beta)^mu 2 a_2 <= 1,
/// ```
///
/// makes the partial sum close-to-convex with respect to `z/(1-z^2)`.
pub fn thm_ctc<T: Real>(a: &CoefficientSequence<T>, p: &Params<T>) -> Result<CriterionReport<T>> {
    p.validate()?;
    validate_sequence(a)?;

    let n = a.degree();
    let mut conditions = Vec::new();
    if n < 2 {
        conditions.push(vacuous("(chain)"));
    } else {
        // Chain elements: e_1 = a_1, e_j = w_j * j * a_j for j >= 2.
        let element = |j: usize| {
            if j == 1 {
                a.a(1)
            } else {
                p.weight(j) * index::<T>(j) * a.a(j)
            }
        };
        for j in 1..n {
            conditions.push(cond("(chain)", Some(j), element(j + 1), element(j)));
        }
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "2.4".to_string(),
        params: echo_plain(p, None),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: "close-to-convex w.r.t. z/(1-z^2)".to_string(),
        notes: Vec::new(),
    })
}

/// Prestarlike criterion:
///
/// ```text
/// (1) (2+alpha)^lambda (2+beta)^mu (3-g)(3-2g) a_3 <= 2(2-g) a_2 <= a_1
/// (2) (k+1+alpha)^lambda (k+1+beta)^mu (k+2-g)(k+2-2g) a_{k+2}
///       <= (k+alpha)^lambda (k+beta)^mu (k+1-g)(k+1) a_{k+1},  k = 2..N-2.
/// ```
pub fn thm_prestarlike<T: Real>(
    a: &CoefficientSequence<T>,
    p: &Params<T>,
    gamma: T,
) -> Result<CriterionReport<T>> {
    p.validate()?;
    validate_order(gamma)?;
    validate_sequence(a)?;

    let n = a.degree();
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let mut conditions = Vec::new();

    if n >= 3 {
        conditions.push(cond(
            "(1a)",
            None,
            p.weight(2) * (three - gamma) * (three - two * gamma) * a.a(3),
            two * (two - gamma) * a.a(2),
        ));
    } else {
        conditions.push(vacuous("(1a)"));
    }
    if n >= 2 {
        conditions.push(cond("(1b)", None, two * (two - gamma) * a.a(2), a.a(1)));
    } else {
        conditions.push(vacuous("(1b)"));
    }
    if n >= 4 {
        for k in 2..=n - 2 {
            let kp1 = index::<T>(k + 1);
            let kp2 = index::<T>(k + 2);
            conditions.push(cond(
                "(2)",
                Some(k),
                p.weight(k + 1) * (kp2 - gamma) * (kp2 - two * gamma) * a.a(k + 2),
                p.weight(k) * (kp1 - gamma) * kp1 * a.a(k + 1),
            ));
        }
    } else {
        conditions.push(vacuous("(2)"));
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "2.5".to_string(),
        params: echo_plain(p, Some(gamma)),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: format!("prestarlike of order {gamma}"),
        notes: Vec::new(),
    })
}

/// Convex criterion (the prestarlike chain at order zero):
///
/// ```text
/// (k+1+alpha)^lambda (k+1+beta)^mu (k+2)^2 a_{k+2}
///   <= (k+alpha)^lambda (k+beta)^mu (k+1)^2 a_{k+1} <= ...
///   <= (2+alpha)^lambda (2+beta)^mu 9 a_3 <= 4 a_2 <= a_1.
/// ```
pub fn cor_convex<T: Real>(
    a: &CoefficientSequence<T>,
    p: &Params<T>,
) -> Result<CriterionReport<T>> {
    p.validate()?;
    validate_sequence(a)?;

    let n = a.degree();
    let mut conditions = Vec::new();
    if n < 2 {
        conditions.push(vacuous("(chain)"));
    } else {
        // e_1 = a_1, e_2 = 4 a_2, e_j = w_{j-1} j^2 a_j for j >= 3.
        let element = |j: usize| {
            let jt = index::<T>(j);
            match j {
                1 => a.a(1),
                2 => real::<T>(4.0) * a.a(2),
                _ => p.weight(j - 1) * jt * jt * a.a(j),
            }
        };
        for j in 1..n {
            conditions.push(cond("(chain)", Some(j), element(j + 1), element(j)));
        }
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "2.7".to_string(),
        params: echo_plain(p, None),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: "convex".to_string(),
        notes: Vec::new(),
    })
}

/// Shared validation for the Cesàro-mean criteria.
fn validate_cesaro_inputs<T: Real>(
    a: Option<&CoefficientSequence<T>>,
    cp: &CesaroParams<T>,
    p: &Params<T>,
    policy: RangePolicy,
) -> Result<()> {
    p.validate_cesaro(policy)?;
    validate_cesaro_domain(cp)?;
    if let Some(a) = a {
        validate_sequence(a)?;
        require_length(a, cp.n)?;
    }
    Ok(())
}

/// Close-to-convexity criterion for the generalized Cesàro mean: under the
/// gating hypothesis `(b+n-2) a_1 >= 2(c+n-2) a_2` and conditions (i)-(iii),
/// the mean is close-to-convex with respect to `z` and `z/(1-z)`, and
/// starlike.
///
/// Condition (ii) is stated for `3 <= k <= n-3`; the `k = n-2` link is also
/// evaluated and reported under `extras` without affecting the verdict,
/// since the chain the proof manipulates runs one index further than the
/// statement.
pub fn cesaro_ctc<T: Real>(
    a: &CoefficientSequence<T>,
    cp: &CesaroParams<T>,
    p: &Params<T>,
    policy: RangePolicy,
) -> Result<CriterionReport<T>> {
    validate_cesaro_inputs(Some(a), cp, p, policy)?;

    let n = cp.n;
    let nt = index::<T>(n);
    let one = T::one();
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let b = cp.b;
    let c = cp.c;

    let gating = vec![cond(
        "gating",
        None,
        two * (c + nt - two) * a.a(2),
        (b + nt - two) * a.a(1),
    )];

    let mut conditions = Vec::new();
    if n >= 3 {
        conditions.push(cond(
            "(i)",
            None,
            two.powf(p.lambda + p.mu + one) * (c + nt - three) * three * a.a(3),
            (two - p.alpha * p.lambda) * (two - p.beta * p.mu) * (b + nt - three) * a.a(2),
        ));
    } else {
        conditions.push(vacuous("(i)"));
    }

    // (ii): (k-1+a-l)(k-1+b-m)(b+n-k-1) k a_k >= (k-1+a)(k-1+b)(c+n-k-1)(k+1) a_{k+1}
    let link = |k: usize| {
        let km1 = index::<T>(k - 1);
        let kt = index::<T>(k);
        let lhs = (km1 + p.alpha) * (km1 + p.beta) * (c + nt - kt - one) * (kt + one) * a.a(k + 1);
        let rhs = (km1 + p.alpha - p.lambda)
            * (km1 + p.beta - p.mu)
            * (b + nt - kt - one)
            * kt
            * a.a(k);
        (lhs, rhs)
    };
    if n >= 6 {
        for k in 3..=n - 3 {
            let (lhs, rhs) = link(k);
            conditions.push(cond("(ii)", Some(k), lhs, rhs));
        }
    } else {
        conditions.push(vacuous("(ii)"));
    }

    let mut extras = Vec::new();
    if n >= 5 {
        let k = n - 2;
        let (lhs, rhs) = link(k);
        extras.push(cond("(ii) proof-range extra", Some(k), lhs, rhs));
    }

    if n >= 3 {
        let nm2 = nt - two;
        conditions.push(cond(
            "(iii)",
            None,
            (nm2 + p.alpha) * (nm2 + p.beta) * c * nt * a.a(n),
            (nm2 + p.alpha - p.lambda)
                * (nm2 + p.beta - p.mu)
                * (one + b - c)
                * (nt - one)
                * a.a(n - 1),
        ));
    } else {
        conditions.push(vacuous("(iii)"));
    }

    let all_satisfied = all_ok(&gating, &conditions);
    Ok(CriterionReport {
        theorem: "3.1".to_string(),
        params: echo_cesaro(p, None, cp),
        gating,
        conditions,
        extras,
        all_satisfied,
        predicted_class: "close-to-convex w.r.t. z and z/(1-z); starlike".to_string(),
        notes: Vec::new(),
    })
}

/// Largest order `g` for which the criterion places the Cesàro mean in
/// `{Re f' > g}`: `g_max = 1 - 2 a_2 (c+n-2)/(b+n-2)`.
pub fn cesaro_r_gamma_bound<T: Real>(a: &CoefficientSequence<T>, cp: &CesaroParams<T>) -> Result<T> {
    require_length(a, 2)?;
    let nt = index::<T>(cp.n);
    let two = real::<T>(2.0);
    Ok(T::one() - two * a.a(2) * (cp.c + nt - two) / (cp.b + nt - two))
}

/// Predicate form of the `Re f' > gamma` criterion: the full
/// close-to-convexity hypotheses plus `gamma <= g_max`.
pub fn cesaro_r_gamma<T: Real>(
    a: &CoefficientSequence<T>,
    cp: &CesaroParams<T>,
    p: &Params<T>,
    gamma: T,
    policy: RangePolicy,
) -> Result<CriterionReport<T>> {
    if gamma < T::zero() {
        return Err(Error::Domain(format!("order must be >= 0, got {gamma}")));
    }
    let base = cesaro_ctc(a, cp, p, policy)?;
    let bound = cesaro_r_gamma_bound(a, cp)?;
    let mut conditions = base.conditions;
    conditions.push(cond("(order)", None, gamma, bound));
    let all_satisfied = all_ok(&base.gating, &conditions);
    Ok(CriterionReport {
        theorem: "3.3".to_string(),
        params: echo_cesaro(p, Some(gamma), cp),
        gating: base.gating,
        conditions,
        extras: base.extras,
        all_satisfied,
        predicted_class: format!("Re f' > {gamma}"),
        notes: Vec::new(),
    })
}

/// Starlikeness of order `lambda + mu - 1/2` for the Cesàro mean. The order
/// is not a free parameter; it is recorded in the report, and a note flags
/// orders `>= 1`, where no normalized function can comply.
pub fn cesaro_starlike_half<T: Real>(
    a: &CoefficientSequence<T>,
    cp: &CesaroParams<T>,
    p: &Params<T>,
    policy: RangePolicy,
) -> Result<CriterionReport<T>> {
    validate_cesaro_inputs(Some(a), cp, p, policy)?;

    let n = cp.n;
    let nt = index::<T>(n);
    let one = T::one();
    let two = real::<T>(2.0);
    let s = p.lambda + p.mu;
    let order = s - real::<T>(0.5);
    let b = cp.b;
    let c = cp.c;

    let mut notes = Vec::new();
    if order >= one {
        notes.push(format!(
            "derived order {order} >= 1: outside [0,1), the leading factor 3-2(lambda+mu) is nonpositive"
        ));
    }

    let mut conditions = Vec::new();
    // (1): (3-2s)(b+n-2) a_1 >= (5-2s)(c+n-2) a_2
    conditions.push(cond(
        "(1)",
        None,
        (real::<T>(5.0) - two * s) * (c + nt - two) * a.a(2),
        (real::<T>(3.0) - two * s) * (b + nt - two) * a.a(1),
    ));
    if n >= 3 {
        conditions.push(cond(
            "(2)",
            None,
            two.powf(s + two) * (real::<T>(7.0) - two * s) * (c + nt - real::<T>(3.0)) * a.a(3),
            (two - p.alpha * p.lambda)
                * (two - p.beta * p.mu)
                * (real::<T>(5.0) - two * s)
                * (b + nt - real::<T>(3.0))
                * a.a(2),
        ));
    } else {
        conditions.push(vacuous("(2)"));
    }
    if n >= 5 {
        for k in 3..=n - 2 {
            let km1 = index::<T>(k - 1);
            let kt = index::<T>(k);
            conditions.push(cond(
                "(3)",
                Some(k),
                (two * kt + real::<T>(3.0) - two * s)
                    * (km1 + p.alpha)
                    * (km1 + p.beta)
                    * (c + nt - kt - one)
                    * a.a(k + 1),
                (two * kt + one - two * s)
                    * (km1 + p.alpha - p.lambda)
                    * (km1 + p.beta - p.mu)
                    * (b + nt - kt - one)
                    * a.a(k),
            ));
        }
    } else {
        conditions.push(vacuous("(3)"));
    }
    if n >= 3 {
        let nm2 = nt - two;
        conditions.push(cond(
            "(4)",
            None,
            (nm2 + p.alpha) * (nm2 + p.beta) * (two * nt + real::<T>(3.0) - two * s) * c * a.a(n),
            (nm2 + p.alpha - p.lambda)
                * (nm2 + p.beta - p.mu)
                * (two * nt + one - two * s)
                * (one + b - c)
                * a.a(n - 1),
        ));
    } else {
        conditions.push(vacuous("(4)"));
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "3.4".to_string(),
        params: echo_cesaro(p, Some(order), cp),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: format!("starlike of order {order}"),
        notes,
    })
}

/// Prestarlikeness of the Cesàro polynomial itself (the mean applied to
/// `z/(1-z)`): the conditions depend only on `(b, c, n)` and the weight
/// parameters.
pub fn cesaro_prestarlike<T: Real>(
    cp: &CesaroParams<T>,
    p: &Params<T>,
    gamma: T,
    policy: RangePolicy,
) -> Result<CriterionReport<T>> {
    validate_cesaro_inputs(None, cp, p, policy)?;
    validate_order(gamma)?;

    let n = cp.n;
    let nt = index::<T>(n);
    let one = T::one();
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let b = cp.b;
    let c = cp.c;

    let mut conditions = Vec::new();
    conditions.push(cond(
        "(1)",
        None,
        two * (two - gamma) * (c + nt - two),
        b + nt - two,
    ));
    if n >= 3 {
        conditions.push(cond(
            "(2)",
            None,
            p.weight(2) * (three - gamma) * (three - two * gamma) * (c + nt - three),
            two * (two - gamma) * (b + nt - three),
        ));
    } else {
        conditions.push(vacuous("(2)"));
    }
    if n >= 5 {
        for k in 2..=n - 3 {
            let kp1 = index::<T>(k + 1);
            let kp2 = index::<T>(k + 2);
            conditions.push(cond(
                "(3)",
                Some(k),
                p.weight(k + 1) * (kp2 - gamma) * (kp2 - two * gamma) * (c + nt - kp1 - one),
                p.weight(k) * (kp1 - gamma) * kp1 * (b + nt - kp1 - one),
            ));
        }
    } else {
        conditions.push(vacuous("(3)"));
    }
    if n >= 3 {
        conditions.push(cond(
            "(4)",
            None,
            p.weight(n - 1) * (nt - gamma) * (nt - two * gamma) * c,
            p.weight(n - 2) * (nt - one - gamma) * (nt - one) * (one + b - c),
        ));
    } else {
        conditions.push(vacuous("(4)"));
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "3.5".to_string(),
        params: echo_cesaro(p, Some(gamma), cp),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: format!("prestarlike of order {gamma}"),
        notes: Vec::new(),
    })
}

/// Close-to-convexity of the Cesàro mean with respect to `z/(1-z^2)`.
pub fn cesaro_ctc_odd<T: Real>(
    a: &CoefficientSequence<T>,
    cp: &CesaroParams<T>,
    p: &Params<T>,
    policy: RangePolicy,
) -> Result<CriterionReport<T>> {
    validate_cesaro_inputs(Some(a), cp, p, policy)?;

    let n = cp.n;
    let nt = index::<T>(n);
    let one = T::one();
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let b = cp.b;
    let c = cp.c;

    let mut conditions = Vec::new();
    conditions.push(cond(
        "(1)",
        None,
        (c + nt - two) * two.powf(p.lambda + p.mu + three) * a.a(2),
        (two - p.alpha * p.lambda) * (two - p.beta * p.mu) * (b + nt - two) * a.a(1),
    ));
    if n >= 4 {
        for k in 2..=n - 2 {
            let kt = index::<T>(k);
            conditions.push(cond(
                "(2)",
                Some(k),
                (kt + p.alpha) * (kt + p.beta) * (c + nt - kt - one) * (kt + one) * a.a(k + 1),
                kt * (kt + p.alpha - p.lambda) * (kt + p.beta - p.mu) * (b + nt - kt - one) * a.a(k),
            ));
        }
    } else {
        conditions.push(vacuous("(2)"));
    }
    if n >= 3 {
        let nm1 = nt - one;
        conditions.push(cond(
            "(3)",
            None,
            c * (nm1 + p.alpha) * (nm1 + p.beta) * nt * a.a(n),
            (nm1 + p.alpha - p.lambda)
                * (nm1 + p.beta - p.mu)
                * (one + b - c)
                * nm1
                * a.a(n - 1),
        ));
    } else {
        conditions.push(vacuous("(3)"));
    }

    let all_satisfied = all_ok::<T>(&[], &conditions);
    Ok(CriterionReport {
        theorem: "3.7".to_string(),
        params: echo_cesaro(p, None, cp),
        gating: Vec::new(),
        conditions,
        extras: Vec::new(),
        all_satisfied,
        predicted_class: "close-to-convex w.r.t. z/(1-z^2)".to_string(),
        notes: Vec::new(),
    })
}

/// Which classical-mean lower bound to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaBoundKind {
    /// Close-to-convexity of the mean of the logarithmic series.
    CloseToConvex,
    /// Prestarlikeness of the Cesàro polynomial (requires an order).
    Prestarlike,
}

/// Lower bound on `delta` making the classical Cesàro mean of order `delta`
/// satisfy the requested criterion at degree `n`.
pub fn example_delta_bound<T: Real>(
    kind: DeltaBoundKind,
    n: usize,
    p: &Params<T>,
    gamma: Option<T>,
) -> Result<T> {
    p.validate_cesaro(RangePolicy::Statement)?;
    let one = T::one();
    let two = real::<T>(2.0);
    let three = real::<T>(3.0);
    let nt = index::<T>(n);
    match kind {
        DeltaBoundKind::CloseToConvex => {
            let s = p.lambda + p.mu;
            let t1 = (nt - two)
                * (two.powf(s + two) / ((two - p.alpha * p.lambda) * (two - p.beta * p.mu)) - one);
            let t2 = (nt - three)
                * ((two * s + p.alpha * p.mu + p.beta * p.lambda + p.lambda * p.mu)
                    / ((two + p.alpha - p.lambda) * (two + p.beta - p.mu)));
            Ok(T::zero().max(t1).max(t2))
        }
        DeltaBoundKind::Prestarlike => {
            let gamma = gamma.ok_or_else(|| {
                Error::Domain("prestarlike delta bound needs an order".to_string())
            })?;
            validate_order(gamma)?;
            let w2 = p.weight(2);
            let w3 = p.weight(3);
            let four = real::<T>(4.0);
            let t1 = (nt - one) * (three - two * gamma);
            let t2 = (nt - two) * (w2 * (three - gamma) * (three - two * gamma)
                / (two * (two - gamma))
                - one);
            let t3 = (nt - three)
                * (w3 * (four - gamma) * (four - two * gamma) / (w2 * (three - gamma) * three)
                    - one);
            Ok(t1.max(t2).max(t3))
        }
    }
}
