//! Numerical membership checks for the classical geometric function classes.
//!
//! Each verifier samples its defining functional over circles inside the
//! unit disk and reports the worst margin together with the point attaining
//! it. This is sampled evidence, not a proof: every report carries the grid
//! and the tolerance it was produced with.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{index, real, Real};
use crate::series::{eval_poly, prestar_kernel, CoefficientSequence, ComplexPoint, StarlikeFunction};

/// Sampling grid: circles of the given radii, each with equally spaced
/// angles on `[0, 2pi)`. Radii are sorted ascending; the angle count is
/// raised to `8 * degree` at verification time when a polynomial needs the
/// extra resolution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskGrid<T> {
    radii: Vec<T>,
    angles: usize,
}

/// Below this modulus a sampled denominator counts as a zero, which
/// disqualifies membership outright (the classes are nonvanishing or
/// locally univalent away from the origin).
const ZERO_THRESHOLD: f64 = 1e-12;

/// Default margin tolerance: `holds` means `margin > -1e-9`.
pub const DEFAULT_MARGIN_TOLERANCE: f64 = 1e-9;

impl<T: Real> DiskGrid<T> {
    pub fn new(radii: Vec<T>, angles: usize) -> Result<Self> {
        if radii.is_empty() || angles == 0 {
            return Err(Error::Empty);
        }
        for &r in &radii {
            if !(r > T::zero() && r < T::one()) {
                return Err(Error::Domain(format!("grid radius must lie in (0,1), got {r}")));
            }
        }
        let mut radii = radii;
        radii.sort_by(|a, b| a.partial_cmp(b).expect("finite radii"));
        radii.dedup();
        Ok(Self { radii, angles })
    }

    /// Radii `{0.5, 0.9, 0.99, 0.999}`, 512 base angles. The outermost
    /// circle stays inside the disk: functionals extend continuously to the
    /// boundary but denominators may vanish on `|z| = 1`.
    pub fn default_grid() -> Self {
        Self {
            radii: vec![real(0.5), real(0.9), real(0.99), real(0.999)],
            angles: 512,
        }
    }

    /// Radii capped at 0.99, for cross-checks that stay clear of the
    /// near-boundary region.
    pub fn inner_grid() -> Self {
        Self {
            radii: vec![real(0.5), real(0.9), real(0.99)],
            angles: 512,
        }
    }

    pub fn radii(&self) -> &[T] {
        &self.radii
    }

    pub fn effective_angles(&self, degree: usize) -> usize {
        self.angles.max(8 * degree)
    }
}

/// Grid metadata echoed into every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridEcho<T> {
    pub radii: Vec<T>,
    pub angles: usize,
}

/// Outcome of one verifier run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassReport<T> {
    /// Which class was tested.
    pub class: String,
    /// Order parameter of the class (the close-to-convex order for that
    /// check, zero for typically real).
    pub gamma: T,
    pub holds: bool,
    /// Minimum of the defining functional minus its threshold over the grid.
    pub margin: T,
    /// Point attaining the margin (ties: smaller radius, then smaller angle).
    pub witness: ComplexPoint<T>,
    pub grid: GridEcho<T>,
    pub tolerance: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<T>,
    /// Comparison function for close-to-convex checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<String>,
    /// A sampled zero of the relevant denominator, if one was hit; forces
    /// `holds = false`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_witness: Option<ComplexPoint<T>>,
}

enum Sample<T> {
    Value(T),
    DenominatorZero,
}

struct ScanOutcome<T> {
    margin: T,
    witness: Complex<T>,
    zero: Option<Complex<T>>,
}

/// Runs the class checks over a fixed grid with a fixed margin tolerance.
#[derive(Debug, Clone)]
pub struct Verifier<T> {
    grid: DiskGrid<T>,
    tolerance: T,
}

impl<T: Real> Verifier<T> {
    pub fn new(grid: DiskGrid<T>) -> Self {
        Self {
            grid,
            tolerance: real(DEFAULT_MARGIN_TOLERANCE),
        }
    }

    pub fn with_tolerance(mut self, tolerance: T) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn grid(&self) -> &DiskGrid<T> {
        &self.grid
    }

    /// Minimize `sample` over the grid. Deterministic: radii ascending,
    /// angles ascending, strict improvement only.
    fn scan(&self, degree: usize, sample: impl Fn(Complex<T>) -> Sample<T>) -> ScanOutcome<T> {
        let angles = self.grid.effective_angles(degree);
        let two_pi = T::PI() + T::PI();
        let mut margin = T::max_value();
        let mut witness = Complex::new(T::zero(), T::zero());
        let mut found = false;
        let mut zero = None;
        for &r in &self.grid.radii {
            for j in 0..angles {
                let theta = two_pi * index::<T>(j) / index::<T>(angles);
                let z = Complex::from_polar(r, theta);
                match sample(z) {
                    Sample::Value(v) => {
                        if !found || v < margin {
                            found = true;
                            margin = v;
                            witness = z;
                        }
                    }
                    Sample::DenominatorZero => {
                        if zero.is_none() {
                            zero = Some(z);
                        }
                    }
                }
            }
        }
        if !found {
            // Every sampled point sat on a zero; only a degenerate input
            // (all coefficients ~0) gets here.
            margin = -T::max_value();
            witness = zero.unwrap_or_else(|| Complex::new(T::zero(), T::zero()));
        }
        ScanOutcome { margin, witness, zero }
    }

    fn report(
        &self,
        class: &str,
        gamma: T,
        degree: usize,
        outcome: ScanOutcome<T>,
    ) -> ClassReport<T> {
        ClassReport {
            class: class.to_string(),
            gamma,
            holds: outcome.zero.is_none() && outcome.margin > -self.tolerance,
            margin: outcome.margin,
            witness: outcome.witness.into(),
            grid: GridEcho {
                radii: self.grid.radii.clone(),
                angles: self.grid.effective_angles(degree),
            },
            tolerance: self.tolerance,
            eta: None,
            comparison: None,
            zero_witness: outcome.zero.map(Into::into),
        }
    }

    fn starlike_outcome(&self, f: &CoefficientSequence<T>, gamma: T) -> ScanOutcome<T> {
        // zf'/f = (sum k a_k z^{k-1}) / (sum a_k z^{k-1}): the removable
        // singularity at 0 is divided out before sampling.
        let num = f.derivative();
        let den = f.coeffs().to_vec();
        let threshold = real::<T>(ZERO_THRESHOLD);
        self.scan(f.degree(), |z| {
            let q = eval_poly(&den, z);
            if (q * z).norm() < threshold {
                Sample::DenominatorZero
            } else {
                Sample::Value((eval_poly(&num, z) / q).re - gamma)
            }
        })
    }

    /// Starlike of order `gamma`: `Re(zf'/f) > gamma` on the disk, `f`
    /// nonvanishing off the origin.
    pub fn starlike(&self, f: &CoefficientSequence<T>, gamma: T) -> ClassReport<T> {
        let outcome = self.starlike_outcome(f, gamma);
        self.report("starlike", gamma, f.degree(), outcome)
    }

    /// Convex of order `gamma`: `Re(1 + zf''/f') > gamma`, computed as
    /// `(sum k^2 a_k z^{k-1}) / (sum k a_k z^{k-1})`; zeros of `f'`
    /// disqualify.
    pub fn convex(&self, f: &CoefficientSequence<T>, gamma: T) -> ClassReport<T> {
        let den = f.derivative();
        let num: Vec<T> = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, &a)| {
                let k = index::<T>(j + 1);
                k * k * a
            })
            .collect();
        let threshold = real::<T>(ZERO_THRESHOLD);
        let outcome = self.scan(f.degree(), |z| {
            let q = eval_poly(&den, z);
            if q.norm() < threshold {
                Sample::DenominatorZero
            } else {
                Sample::Value((eval_poly(&num, z) / q).re - gamma)
            }
        });
        self.report("convex", gamma, f.degree(), outcome)
    }

    /// Close-to-convex with respect to `g`: `Re e^{i eta}(zf'/g - mu) > 0`.
    /// Catalog comparison functions are evaluated in closed form; polynomial
    /// `g`s are sampled and their zeros disqualify.
    pub fn close_to_convex(
        &self,
        f: &CoefficientSequence<T>,
        g: &ComparisonTarget<T>,
        eta: T,
        mu_order: T,
    ) -> ClassReport<T> {
        let num = f.derivative();
        let phase = Complex::from_polar(T::one(), eta);
        let mu = Complex::new(mu_order, T::zero());
        let threshold = real::<T>(ZERO_THRESHOLD);
        let degree = f.degree().max(g.degree_hint());
        let outcome = self.scan(degree, |z| {
            // g(z)/z, nonzero at the origin by normalization of g.
            let h = match g {
                ComparisonTarget::Catalog(c) => c.h_value(z),
                ComparisonTarget::Polynomial(p) => eval_poly(p.coeffs(), z),
            };
            if (h * z).norm() < threshold {
                Sample::DenominatorZero
            } else {
                Sample::Value((phase * (eval_poly(&num, z) / h - mu)).re)
            }
        });
        let mut report = self.report("close-to-convex", mu_order, degree, outcome);
        report.eta = Some(eta);
        report.comparison = Some(g.describe());
        report
    }

    /// Typically real: `Im z * Im f(z) >= 0`; the margin is the minimum of
    /// `Im f(z) * sign(Im z)` over points off the real axis.
    pub fn typically_real(&self, f: &CoefficientSequence<T>) -> ClassReport<T> {
        let outcome = self.scan(f.degree(), |z| {
            if z.im == T::zero() {
                // Points on the real axis carry no sign information; skip
                // them by reporting a value that never wins the minimum.
                Sample::Value(T::max_value())
            } else {
                let v = f.evaluate(z).im;
                Sample::Value(if z.im > T::zero() { v } else { -v })
            }
        });
        self.report("typically-real", T::zero(), f.degree(), outcome)
    }

    /// Prestarlike of order `gamma`: the convolution with the kernel
    /// `z/(1-z)^{2-2gamma}` must be starlike of order `gamma`.
    pub fn prestarlike(&self, f: &CoefficientSequence<T>, gamma: T) -> Result<ClassReport<T>> {
        let kernel = prestar_kernel(gamma, f.degree())?;
        let conv = f.hadamard(&kernel);
        let outcome = self.starlike_outcome(&conv, gamma);
        Ok(self.report("prestarlike", gamma, f.degree(), outcome))
    }

    /// `Re f'(z) > gamma` on the disk.
    pub fn r_gamma(&self, f: &CoefficientSequence<T>, gamma: T) -> ClassReport<T> {
        let fp = f.derivative();
        let outcome = self.scan(f.degree(), |z| Sample::Value(eval_poly(&fp, z).re - gamma));
        self.report("r-gamma", gamma, f.degree(), outcome)
    }
}

/// Comparison function for close-to-convex checks: either one of the nine
/// catalog functions (evaluated in closed form, nonvanishing inside the
/// disk) or an explicit polynomial.
#[derive(Debug, Clone, PartialEq)]
pub enum ComparisonTarget<T> {
    Catalog(StarlikeFunction),
    Polynomial(CoefficientSequence<T>),
}

impl<T: Real> ComparisonTarget<T> {
    pub fn describe(&self) -> String {
        match self {
            ComparisonTarget::Catalog(c) => c.formula().to_string(),
            ComparisonTarget::Polynomial(p) => format!("polynomial of degree {}", p.degree()),
        }
    }

    fn degree_hint(&self) -> usize {
        match self {
            ComparisonTarget::Catalog(_) => 0,
            ComparisonTarget::Polynomial(p) => p.degree(),
        }
    }
}
