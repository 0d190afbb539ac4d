//! End-to-end acceptance suite.
//!
//! One test per criterion, numbered a01..a11; each prints a `[PASS]` line
//! with its timing (visible with `cargo test --test acceptance -- --nocapture`).
//! Expected values come from routes independent of the code under test:
//! binomial tables built by the additive recurrence, closed forms expanded by
//! hand, generalized binomial coefficients computed term by term, or a second
//! algorithm for the same quantity. Randomized criteria use a fixed seed and
//! are fully reproducible.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use riordan_fps::*;

fn report(id: &str, name: &str, started: Instant) {
    println!("[PASS] {id} {name} ({:.3}s)", started.elapsed().as_secs_f64());
}

/// 1/(1-x): all coefficients 1.
fn geometric(n: usize) -> UnitSeries {
    UnitSeries::new(TruncatedSeries::from_coeffs(vec![int(1); n + 1]).unwrap()).unwrap()
}

/// x/(1-x): 0 then all 1.
fn pascal_substitution(n: usize) -> DeltaSeries {
    let mut coeffs = vec![int(1); n + 1];
    coeffs[0] = int(0);
    DeltaSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap()
}

/// -x/(1-x): 0 then all -1.
fn negated_pascal_substitution(n: usize) -> DeltaSeries {
    let mut coeffs = vec![int(-1); n + 1];
    coeffs[0] = int(0);
    DeltaSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap()
}

fn one_plus_x(n: usize) -> UnitSeries {
    let mut coeffs = vec![int(0); n + 1];
    coeffs[0] = int(1);
    coeffs[1] = int(1);
    UnitSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap()
}

/// Binomial coefficients by the additive recurrence (row 0 upward); the
/// series machinery never touches this.
fn binomial_table(n: usize) -> Vec<Vec<Scalar>> {
    let mut table = vec![vec![Scalar::zero(); n + 1]; n + 1];
    table[0][0] = Scalar::one();
    for row in 1..=n {
        table[row][0] = Scalar::one();
        for col in 1..=row {
            let value = &table[row - 1][col - 1] + &table[row - 1][col];
            table[row][col] = value;
        }
    }
    table
}

/// C(alpha, m) = alpha (alpha-1) ... (alpha-m+1) / m!, term by term.
fn generalized_binomial(alpha: &Scalar, m: usize) -> Scalar {
    let mut acc = Scalar::one();
    for j in 0..m {
        acc = acc * (alpha - int(j as i64)) / int(j as i64 + 1);
    }
    acc
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// Coefficient magnitudes are kept small so that intermediate rationals stay
// short; the algebra is exercised identically and the suite stays fast.
fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2))
}

fn random_integer_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    int(rng.gen_range(-2..=2))
}

fn random_nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn random_coeffs(rng: &mut ChaCha8Rng, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| random_scalar(rng)).collect()
}

fn random_delta(rng: &mut ChaCha8Rng, n: usize) -> DeltaSeries {
    let mut coeffs = vec![Scalar::zero(), random_nonzero_scalar(rng)];
    coeffs.extend(random_coeffs(rng, n - 1));
    DeltaSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap()
}

/// Random multiplier with constant term +-1 and tail order exactly
/// `tail_order`.
fn random_involution_multiplier(
    rng: &mut ChaCha8Rng,
    n: usize,
    tail_order: usize,
) -> UnitSeries {
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[0] = int(if rng.gen_bool(0.5) { 1 } else { -1 });
    coeffs[tail_order] = random_nonzero_scalar(rng);
    for c in coeffs.iter_mut().skip(tail_order + 1) {
        *c = random_scalar(rng);
    }
    UnitSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap()
}

#[test]
fn a01_pascal_block_matches_the_binomial_table() {
    let started = Instant::now();
    let n = 20;
    let element = RiordanElement::new(geometric(n), pascal_substitution(n)).unwrap();
    let block = element.to_matrix();
    let oracle = binomial_table(n);
    for row in 0..=n {
        for col in 0..=n {
            assert_eq!(
                block.entry(row, col),
                &oracle[row][col],
                "entry ({row}, {col})"
            );
        }
    }
    assert!(started.elapsed().as_secs_f64() < 1.0, "must finish within 1s");
    report("a01", "pascal block matches the binomial table at order 20", started);
}

#[test]
fn a02_known_involution_squares_to_the_identity_at_order_64() {
    let started = Instant::now();
    let n = 64;
    let element =
        RiordanElement::new(geometric(n), negated_pascal_substitution(n)).unwrap();
    let square = element.mul(&element).unwrap();
    assert_eq!(square, RiordanElement::identity(n).unwrap());
    assert!(element.check_order(2).holds());
    assert!(started.elapsed().as_secs_f64() < 1.0, "must finish within 1s");
    report("a02", "known involution squares to the identity through order 64", started);
}

#[test]
fn a03_constructed_involution_for_the_geometric_series() {
    let started = Instant::now();
    let n = 64;
    let built = involution_from_multiplier(&geometric(n)).unwrap();
    assert_eq!(built.order_bound(), n);
    assert_eq!(built.substitution(), &negated_pascal_substitution(n));
    report("a03", "constructed substitution is -x/(1-x) through order 64", started);
}

#[test]
fn a04_aerated_involutions_match_the_binomial_sum() {
    let started = Instant::now();
    let n = 50;
    for stride in [3usize, 5] {
        let base = RiordanElement::new(geometric(n), negated_pascal_substitution(n)).unwrap();
        let built = aerated_involution(&base, stride as u32).unwrap();
        assert_eq!(built.order_bound(), n);
        let alpha = ratio(-1, stride as i64);
        let coeffs = built.substitution().series().coeffs();
        for (idx, coeff) in coeffs.iter().enumerate() {
            let expected = if idx >= 1 && (idx - 1) % stride == 0 {
                let m = (idx - 1) / stride;
                let sign = if m % 2 == 0 { int(-1) } else { int(1) };
                sign * generalized_binomial(&alpha, m)
            } else {
                Scalar::zero()
            };
            assert_eq!(coeff, &expected, "stride {stride}, index {idx}");
        }
    }
    report("a04", "aerated substitutions match the alternating binomial sum at order 50", started);
}

#[test]
fn a05_aeration_agrees_with_the_direct_construction() {
    let started = Instant::now();
    let n = 40;
    let multipliers: [UnitSeries; 2] = [geometric(n), one_plus_x(n)];
    for multiplier in multipliers {
        // tail order 1, so the constructed element keeps the full order
        let element = involution_from_multiplier(&multiplier).unwrap();
        assert_eq!(element.order_bound(), n);
        for stride in [1u32, 3, 5] {
            let via_aeration = aerated_involution(&element, stride).unwrap();
            let extended = UnitSeries::new(
                aerate_to(multiplier.series(), stride, n + stride as usize - 1).unwrap(),
            )
            .unwrap();
            let direct = involution_from_multiplier(&extended).unwrap();
            assert_eq!(direct.order_bound(), n);
            assert_eq!(
                via_aeration.substitution(),
                direct.substitution(),
                "stride {stride}"
            );
        }
    }
    report("a05", "aeration and direct construction build the same substitution at order 40", started);
}

#[test]
fn a06_unit_roots_round_trip_and_leading_terms_follow_the_case_rule() {
    let started = Instant::now();
    let n = 32;
    let mut rng = rng(0x5eed_0006);

    // 100 random series with constant term 1, each tested at four degrees.
    for _ in 0..100 {
        let mut coeffs = vec![Scalar::one()];
        coeffs.extend((0..n).map(|_| random_integer_scalar(&mut rng)));
        let a = UnitSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap();
        for degree in [2u32, 3, 5, 7] {
            let b = unit_root(&a, degree).unwrap();
            assert!(b.constant_term().is_one());
            assert_eq!(b.pow(degree), a, "degree {degree}");
        }
    }

    // Leading-term case rule: with a = 1 + a_r x^r + a_{r+s} x^{r+s} + ...,
    // the root has coefficient a_r/n at x^r, and at t = min(r+s, 2r):
    //   r > s:  a_{r+s}/n
    //   r < s:  (1-n)/(2n^2) * a_r^2
    //   r = s:  a_{2r}/n + (1-n)/(2n^2) * a_r^2
    for _ in 0..20 {
        for (r, s) in [(3usize, 2usize), (2, 3), (2, 2)] {
            let degree = [2u32, 3, 5, 7][rng.gen_range(0..4)];
            let deg = int(i64::from(degree));
            let lead = random_nonzero_scalar(&mut rng);
            let second = random_nonzero_scalar(&mut rng);
            let mut coeffs = vec![Scalar::zero(); n + 1];
            coeffs[0] = Scalar::one();
            coeffs[r] = lead.clone();
            coeffs[r + s] = second.clone();
            // free random tail beyond r + s
            for c in coeffs.iter_mut().skip(r + s + 1) {
                *c = random_scalar(&mut rng);
            }
            let a = UnitSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap();
            let b = unit_root(&a, degree).unwrap();
            assert_eq!(b.series().coeffs()[r], &lead / &deg, "first term, r={r}, s={s}");
            let t = (r + s).min(2 * r);
            let correction =
                (int(1) - &deg) / (int(2) * &deg * &deg) * &lead * &lead;
            let expected = if r > s {
                &second / &deg
            } else if r < s {
                correction
            } else {
                &second / &deg + correction
            };
            assert_eq!(b.series().coeffs()[t], expected, "case r={r}, s={s}");
            assert_eq!(b.pow(degree), a);
        }
    }
    report("a06", "unit roots round-trip at order 32 and obey the leading-term case rule", started);
}

#[test]
fn a07_both_compositional_inverse_algorithms_agree() {
    let started = Instant::now();
    let n = 32;
    let mut rng = rng(0x5eed_0007);
    for _ in 0..100 {
        let mut coeffs = vec![Scalar::zero(), int([1, -1, 2, -2][rng.gen_range(0..4)])];
        coeffs.extend((0..n - 1).map(|_| random_integer_scalar(&mut rng)));
        let f = DeltaSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap();
        let triangular = compositional_inverse(&f);
        let lagrange = compositional_inverse_lagrange(&f);
        assert_eq!(triangular, lagrange);
        let x = DeltaSeries::identity(n).unwrap().into_series();
        assert_eq!(compose(f.series(), &triangular.to_positive()).unwrap(), x);
        assert_eq!(compose(triangular.series(), &f.to_positive()).unwrap(), x);
    }
    report("a07", "triangular and Lagrange inverses agree on 100 series at order 32", started);
}

#[test]
fn a08_product_only_check_is_decisive_on_constructed_involutions() {
    let started = Instant::now();
    let mut elements = Vec::new();

    // the elements of a02..a05
    let n = 64;
    elements.push(RiordanElement::new(geometric(n), negated_pascal_substitution(n)).unwrap());
    elements.push(involution_from_multiplier(&geometric(n)).unwrap());
    for stride in [3u32, 5] {
        let base =
            RiordanElement::new(geometric(50), negated_pascal_substitution(50)).unwrap();
        elements.push(aerated_involution(&base, stride).unwrap());
    }
    for multiplier in [geometric(40), one_plus_x(40)] {
        let element = involution_from_multiplier(&multiplier).unwrap();
        for stride in [1u32, 3, 5] {
            elements.push(aerated_involution(&element, stride).unwrap());
        }
    }

    // 50 random constructions with odd tail order
    let mut rng = rng(0x5eed_0008);
    let target_order = 24;
    for i in 0..50 {
        let tail_order = [1usize, 3, 5][i % 3];
        let multiplier =
            random_involution_multiplier(&mut rng, target_order + tail_order - 1, tail_order);
        let element = involution_from_multiplier(&multiplier).unwrap();
        assert_eq!(element.order_bound(), target_order);
        elements.push(element);
    }

    for (i, element) in elements.iter().enumerate() {
        let shortcut = element.check_order_shortcut(2);
        assert_eq!(shortcut.path, CheckPath::Shortcut, "element {i}");
        assert!(shortcut.verdict.holds(), "element {i}");
        assert!(element.check_order(2).holds(), "element {i}");
        let twice = iterate(element.substitution(), 2);
        assert_eq!(
            twice,
            DeltaSeries::identity(element.order_bound()).unwrap(),
            "element {i}"
        );
    }
    report("a08", "product-only order check is decisive on 58 involutions", started);
}

#[test]
fn a09_perturbed_substitutions_fail_the_order_check() {
    let started = Instant::now();
    let n = 16;
    let mut rng = rng(0x5eed_0009);
    for _ in 0..20 {
        let multiplier = random_involution_multiplier(&mut rng, n, 1);
        let element = involution_from_multiplier(&multiplier).unwrap();
        assert_eq!(element.order_bound(), n);
        for index in 2..=n {
            for epsilon in [int(1), ratio(-1, 2)] {
                let mut coeffs = element.substitution().series().coeffs().to_vec();
                coeffs[index] += &epsilon;
                let perturbed = RiordanElement::new(
                    element.multiplier().clone(),
                    DeltaSeries::new(TruncatedSeries::from_coeffs(coeffs).unwrap()).unwrap(),
                )
                .unwrap();
                assert!(
                    !perturbed.check_order(2).holds(),
                    "perturbation at {index} by {epsilon} must break the involution"
                );
            }
        }
    }
    report("a09", "every single-coefficient perturbation breaks the involution at order 16", started);
}

#[test]
fn a10_inner_series_recovery() {
    let started = Instant::now();
    let target_order = 24;
    let mut rng = rng(0x5eed_0010);
    for i in 0..100 {
        let tail_order = [1usize, 2, 3][i % 3];
        let inner_order = [1usize, 2, 3][(i / 3) % 3];
        let n = target_order + (tail_order - 1) * inner_order;

        // outer: random constant, tail order exactly `tail_order`
        let mut g_coeffs = vec![Scalar::zero(); n + 1];
        g_coeffs[0] = random_scalar(&mut rng);
        g_coeffs[tail_order] = random_nonzero_scalar(&mut rng);
        for c in g_coeffs.iter_mut().skip(tail_order + 1) {
            *c = random_scalar(&mut rng);
        }
        let g = TruncatedSeries::from_coeffs(g_coeffs).unwrap();

        // inner: order exactly `inner_order`
        let leading = random_nonzero_scalar(&mut rng);
        let mut a_coeffs = vec![Scalar::zero(); n + 1];
        a_coeffs[inner_order] = leading.clone();
        for c in a_coeffs.iter_mut().skip(inner_order + 1) {
            *c = random_scalar(&mut rng);
        }
        let a = PositiveSeries::new(TruncatedSeries::from_coeffs(a_coeffs).unwrap()).unwrap();

        let c = compose(&g, &a).unwrap();
        let recovered = solve_inner(&g, &c, &leading, inner_order).unwrap();
        assert_eq!(recovered.order_bound(), target_order, "case {i}");
        assert_eq!(recovered, a.retruncate(target_order).unwrap(), "case {i}");
    }
    report("a10", "solve_inner recovers 100 random inner series through order 24", started);
}

#[test]
fn a11_matrix_expansion_respects_products() {
    let started = Instant::now();
    let n = 12;
    let mut rng = rng(0x5eed_0011);
    for _ in 0..50 {
        let mut g_coeffs = vec![random_nonzero_scalar(&mut rng)];
        g_coeffs.extend(random_coeffs(&mut rng, n));
        let a = RiordanElement::new(
            UnitSeries::new(TruncatedSeries::from_coeffs(g_coeffs).unwrap()).unwrap(),
            random_delta(&mut rng, n),
        )
        .unwrap();
        let mut h_coeffs = vec![random_nonzero_scalar(&mut rng)];
        h_coeffs.extend(random_coeffs(&mut rng, n));
        let b = RiordanElement::new(
            UnitSeries::new(TruncatedSeries::from_coeffs(h_coeffs).unwrap()).unwrap(),
            random_delta(&mut rng, n),
        )
        .unwrap();
        assert_eq!(
            a.mul(&b).unwrap().to_matrix(),
            a.to_matrix().mul(&b.to_matrix()).unwrap()
        );
    }
    report("a11", "matrix blocks multiply exactly for 50 random pairs at order 12", started);
}
