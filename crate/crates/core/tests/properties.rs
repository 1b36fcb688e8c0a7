//! Cross-cutting invariants, checked with randomized inputs.

use num_complex::Complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gft::cesaro::{self, CesaroParams};
use gft::criteria::{self, Params, RangePolicy};
use gft::sampling;
use gft::series::{integrate, pochhammer_ratio, CoefficientSequence};
use gft::trig::{self, SumKind, ThetaGrid};
use gft::verify::{ComparisonTarget, DiskGrid, Verifier};

type Seq = CoefficientSequence<f64>;

fn seq(coeffs: Vec<f64>) -> Seq {
    Seq::new(coeffs).unwrap()
}

/// Term-by-term reference summation for the Horner evaluator.
fn naive_eval(f: &Seq, z: Complex<f64>) -> Complex<f64> {
    let mut acc = Complex::new(0.0, 0.0);
    let mut power = Complex::new(1.0, 0.0);
    for &c in f.coeffs() {
        power *= z;
        acc += power * c;
    }
    acc
}

proptest! {
    /// Horner evaluation matches naive summation to 1e-12 relative to the
    /// absolute-sum scale, across the disk of radius 0.999.
    #[test]
    fn horner_matches_naive(
        coeffs in prop::collection::vec(-1.0f64..1.0, 1..512),
        radius in 0.0f64..0.999,
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        let f = seq({ let mut c = coeffs; c[0] = 1.0; c });
        let z = Complex::from_polar(radius, angle);
        let h = f.evaluate(z);
        let n = naive_eval(&f, z);
        let scale: f64 = f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| c.abs() * radius.powi(j as i32 + 1))
            .sum();
        prop_assert!((h - n).norm() <= 1e-12 * scale.max(1.0));
    }

    /// Hadamard convolution commutes exactly.
    #[test]
    fn hadamard_commutes(
        a in prop::collection::vec(-10.0f64..10.0, 1..64),
        b in prop::collection::vec(-10.0f64..10.0, 1..64),
    ) {
        let f = seq(a);
        let g = seq(b);
        prop_assert_eq!(f.hadamard(&g), g.hadamard(&f));
    }

    /// On dyadic coefficients the triple product is exact, so associativity
    /// holds bitwise.
    #[test]
    fn hadamard_associates_on_dyadics(
        a in prop::collection::vec(-64i32..64, 1..64),
        b in prop::collection::vec(-64i32..64, 1..64),
        c in prop::collection::vec(-64i32..64, 1..64),
    ) {
        let dy = |v: Vec<i32>| seq(v.into_iter().map(|x| x as f64 / 16.0).collect());
        let (f, g, h) = (dy(a), dy(b), dy(c));
        prop_assert_eq!(f.hadamard(&g).hadamard(&h), f.hadamard(&g.hadamard(&h)));
    }

    /// differentiate . integrate is the identity on coefficient lists.
    #[test]
    fn derivative_inverts_integrate(
        coeffs in prop::collection::vec(-10.0f64..10.0, 1..128),
    ) {
        let back = integrate(&coeffs).unwrap().derivative();
        for (orig, round) in coeffs.iter().zip(back.iter()) {
            prop_assert!((orig - round).abs() <= 4e-16 * orig.abs());
        }
    }

    /// (x)_k / (x)_k accumulates to exactly one.
    #[test]
    fn pochhammer_ratio_of_itself_is_one(
        x in 0.01f64..50.0,
        k in 0usize..200,
    ) {
        prop_assert_eq!(pochhammer_ratio(x, x, k).unwrap(), 1.0);
    }

    /// The Cesàro mean preserves normalization and, for b >= c, its weight
    /// ratios lie in (0, 1].
    #[test]
    fn cesaro_mean_normalized_with_unit_ratios(
        bc in (0.2f64..5.0, 0.2f64..5.0),
        n in 2usize..40,
    ) {
        let (extra, c) = bc;
        let cp = CesaroParams::new(c + extra, c, n).unwrap();
        let ones = seq(vec![1.0; n]);
        let s = cesaro::cesaro_mean(&ones, &cp).unwrap();
        prop_assert_eq!(s.a(1), 1.0);
        for k in 2..=n {
            prop_assert!(s.a(k) > 0.0 && s.a(k) <= 1.0 + 1e-12, "ratio {} at {}", s.a(k), k);
        }
    }

    /// The classical mean agrees with the generalized mean at b = 1+delta,
    /// c = 1, and acts linearly on coefficients.
    #[test]
    fn classical_matches_generalized_and_is_linear(
        delta in -0.89f64..5.0,
        n in 2usize..64,
        lam in -2.0f64..2.0,
    ) {
        let f = seq((1..=n).map(|k| 1.0 / k as f64).collect());
        let g = seq((1..=n).map(|k| 0.5f64.powi(k as i32)).collect());
        let cp = CesaroParams::classical(delta, n).unwrap();

        let classical = cesaro::classical_cesaro(&f, delta, n).unwrap();
        let general = cesaro::cesaro_mean(&f, &cp).unwrap();
        prop_assert_eq!(classical, general);

        // linearity on the coefficient lists
        let combo = seq(f.coeffs().iter().zip(g.coeffs()).map(|(a, b)| a + lam * b).collect());
        let lhs = cesaro::cesaro_mean(&combo, &cp).unwrap();
        let fa = cesaro::cesaro_mean(&f, &cp).unwrap();
        let gb = cesaro::cesaro_mean(&g, &cp).unwrap();
        for k in 1..=n {
            let rhs = fa.a(k) + lam * gb.a(k);
            prop_assert!((lhs.a(k) - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        }
    }

    /// The convex chain criterion coincides with the prestarlike criterion
    /// of order zero as a predicate.
    #[test]
    fn convex_chain_equals_prestarlike_at_zero(
        raw in prop::collection::vec(0.01f64..1.2, 1..32),
        alpha in 0.0f64..2.0,
        beta in 0.0f64..2.0,
        split in 0.0f64..1.0,
    ) {
        let mut coeffs = vec![1.0];
        let mut prev = 1.0f64;
        for r in raw {
            prev *= r;
            coeffs.push(prev);
        }
        let a = seq(coeffs);
        let s = 1.0 + split; // lambda + mu in [1, 2]
        let p = Params::new(alpha, beta, s * split, s - s * split);
        let conv = criteria::cor_convex(&a, &p).unwrap();
        let pre = criteria::thm_prestarlike(&a, &p, 0.0).unwrap();
        prop_assert_eq!(conv.all_satisfied, pre.all_satisfied);
    }
}

#[test]
fn chain_condition_implies_positive_scans() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for round in 0..150 {
        let (alpha, beta, lambda, mu) = sampling::random_chain_params(&mut rng);
        let n = 2 + (round % 59);
        let a = sampling::chain_sequence(alpha, beta, lambda, mu, n, &mut rng);
        let chain = trig::check_chain_condition(2.0, &a, alpha, beta, lambda, mu).unwrap();
        assert!(chain.satisfied, "round {round}");

        let t = gft::TrigCoeffs::new(2.0, a).unwrap();
        let grid = ThetaGrid::for_degree(n);
        for kind in [SumKind::Cosine, SumKind::Sine] {
            let scan = trig::positivity_scan(&t, kind, grid).unwrap();
            assert!(
                scan.positive,
                "round {round} {kind:?}: min {} at {}",
                scan.min_value, scan.argmin_theta
            );
        }
    }
}

#[test]
fn starlike_criterion_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let verifier = Verifier::new(DiskGrid::inner_grid());
    for round in 0..200 {
        let p = sampling::random_cesaro_params(&mut rng, 1.9);
        let gamma = rand::Rng::gen_range(&mut rng, 0.0..0.9);
        let n = rand::Rng::gen_range(&mut rng, 1..=50);
        let a = sampling::starlike_admissible(&p, gamma, n, round % 10 == 0, &mut rng);
        let report = criteria::thm_starlike(&a, &p, gamma).unwrap();
        assert!(report.all_satisfied, "round {round}");
        let check = verifier.starlike(&a, gamma);
        assert!(check.holds, "round {round}: margin {}", check.margin);
    }
}

#[test]
fn ctc_criterion_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let verifier = Verifier::new(DiskGrid::inner_grid());
    let g = ComparisonTarget::Catalog(gft::series::StarlikeFunction::OddGeometric);
    for round in 0..200 {
        let p = sampling::random_cesaro_params(&mut rng, 1.9);
        let n = rand::Rng::gen_range(&mut rng, 1..=50);
        let a = sampling::ctc_admissible(&p, n, &mut rng);
        let report = criteria::thm_ctc(&a, &p).unwrap();
        assert!(report.all_satisfied, "round {round}");
        let check = verifier.close_to_convex(&a, &g, 0.0, 0.0);
        assert!(check.holds, "round {round}: margin {}", check.margin);
    }
}

#[test]
fn prestarlike_criterion_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let verifier = Verifier::new(DiskGrid::inner_grid());
    for round in 0..200 {
        let p = sampling::random_cesaro_params(&mut rng, 1.9);
        let gamma = rand::Rng::gen_range(&mut rng, 0.0..0.9);
        let n = rand::Rng::gen_range(&mut rng, 1..=50);
        let a = sampling::prestarlike_admissible(&p, gamma, n, &mut rng);
        let report = criteria::thm_prestarlike(&a, &p, gamma).unwrap();
        assert!(report.all_satisfied, "round {round}");
        let check = verifier.prestarlike(&a, gamma).unwrap();
        assert!(check.holds, "round {round}: margin {}", check.margin);
    }
}

#[test]
fn convex_criterion_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let verifier = Verifier::new(DiskGrid::inner_grid());
    for round in 0..200 {
        let p = sampling::random_cesaro_params(&mut rng, 1.9);
        let n = rand::Rng::gen_range(&mut rng, 1..=50);
        let a = sampling::prestarlike_admissible(&p, 0.0, n, &mut rng);
        let report = criteria::cor_convex(&a, &p).unwrap();
        assert!(report.all_satisfied, "round {round}");
        let check = verifier.convex(&a, 0.0);
        assert!(check.holds, "round {round}: margin {}", check.margin);
    }
}

/// The `Re f' > gamma` bound at order zero is exactly the gating hypothesis
/// of the close-to-convexity criterion.
#[test]
fn r_gamma_zero_reduces_to_gating() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for _ in 0..100 {
        let n = rand::Rng::gen_range(&mut rng, 5..=30);
        let c = rand::Rng::gen_range(&mut rng, 0.3..2.0);
        let b = c + rand::Rng::gen_range(&mut rng, 0.0..20.0);
        let cp = CesaroParams::new(b, c, n).unwrap();
        let mut coeffs = vec![1.0];
        for k in 2..=n {
            coeffs.push(rand::Rng::gen_range(&mut rng, 0.01..1.5) / k as f64);
        }
        let a = seq(coeffs);
        let bound = criteria::cesaro_r_gamma_bound(&a, &cp).unwrap();
        let nf = n as f64;
        let gating_ok = 2.0 * (c + nf - 2.0) * a.a(2) <= (b + nf - 2.0) * a.a(1);
        assert_eq!(bound >= 0.0, gating_ok);
    }
}

/// Scan results do not move when the grid is doubled, for sums whose
/// minimum is interior.
#[test]
fn scan_grid_doubling_on_random_interior_minima() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    for _ in 0..40 {
        let n = rand::Rng::gen_range(&mut rng, 2..=16);
        let b: Vec<f64> = (0..n)
            .map(|_| rand::Rng::gen_range(&mut rng, -1.0..1.0))
            .collect();
        let t = gft::TrigCoeffs::new(2.0, b).unwrap();
        for kind in [SumKind::Cosine, SumKind::Sine] {
            let a = trig::positivity_scan(&t, kind, ThetaGrid::new(4096).unwrap()).unwrap();
            // Skip edge-hugging minima; their value legitimately tracks the
            // grid span.
            let edge = ThetaGrid::new(4096).unwrap().theta::<f64>(2);
            if a.argmin_theta <= edge || a.argmin_theta >= std::f64::consts::PI - edge {
                continue;
            }
            let big = trig::positivity_scan(&t, kind, ThetaGrid::new(8192).unwrap()).unwrap();
            assert!(
                (a.min_value - big.min_value).abs() < 1e-9,
                "{kind:?}: {} vs {}",
                a.min_value,
                big.min_value
            );
        }
    }
}
