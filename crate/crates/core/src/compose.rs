//! Substitution of series, iteration, and compositional inverses.
//!
//! Delta series form a group under composition at a fixed truncation order:
//! `x` is the identity and every delta series has a two-sided inverse. The
//! inverse is computed by two independent routes, a triangular solve and the
//! Lagrange inversion formula, which double-check each other in the test
//! suites.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ratio, Scalar};
use crate::series::{DeltaSeries, PositiveSeries, TruncatedSeries, UnitSeries};

/// Substitute `inner` into `outer`: the coefficient of `x^m` of the result is
/// the exact coefficient of `outer(inner(x))`, well defined because `inner`
/// has zero constant term. Evaluated Horner style, so coefficient `m` only
/// ever touches `outer` coefficients `0..=m` and `inner` coefficients `1..=m`.
pub fn compose(outer: &TruncatedSeries, inner: &PositiveSeries) -> Result<TruncatedSeries> {
    let n = outer.order_bound();
    if inner.order_bound() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: inner.order_bound(),
        });
    }
    let coeffs = outer.coeffs();
    let mut acc = TruncatedSeries::constant(coeffs[n].clone(), n);
    for m in (0..n).rev() {
        acc = acc.mul(inner.series())?;
        acc.coeffs[0] += &coeffs[m];
    }
    Ok(acc)
}

/// Compositional inverse: the unique delta series `g` with
/// `f(g(x)) = g(f(x)) = x` through the window.
///
/// Solves `sum_k g_k f(x)^k = x` by forward substitution: the equation at
/// order `m` determines `g_m` with pivot `f_1^m`.
pub fn compositional_inverse(f: &DeltaSeries) -> DeltaSeries {
    let n = f.order_bound();
    let fs = f.series();
    let mut powers: Vec<TruncatedSeries> = Vec::with_capacity(n);
    powers.push(fs.clone());
    for _ in 1..n {
        let next = powers
            .last()
            .unwrap()
            .mul(fs)
            .expect("equal orders by construction");
        powers.push(next);
    }
    let mut partial = TruncatedSeries::zero(n);
    let mut out = vec![Scalar::zero(); n + 1];
    for m in 1..=n {
        let power = &powers[m - 1];
        let target = if m == 1 { Scalar::one() } else { Scalar::zero() };
        let solved = (target - &partial.coeffs()[m]) / &power.coeffs()[m];
        if !solved.is_zero() {
            partial = partial
                .add(&power.scale(&solved))
                .expect("equal orders by construction");
            out[m] = solved;
        }
    }
    DeltaSeries::new(TruncatedSeries::from_coeffs(out).expect("nonempty"))
        .expect("inverse of a delta series is a delta series")
}

/// Compositional inverse via Lagrange inversion:
/// coefficient `n` of the inverse is `(1/n) * [x^(n-1)] (x / f(x))^n`.
///
/// `x / f(x)` is the reciprocal of the unit series obtained by dividing the
/// linear factor out of `f`; its powers are accumulated one multiplication
/// per coefficient.
pub fn compositional_inverse_lagrange(f: &DeltaSeries) -> DeltaSeries {
    let n = f.order_bound();
    let shifted = f
        .series()
        .shift_down(1)
        .expect("delta series have zero constant term");
    let base = UnitSeries::new(shifted)
        .expect("delta series have nonzero linear coefficient")
        .recip();
    let mut out = vec![Scalar::zero(); n + 1];
    // after the m-th round, power = (x/f)^m at order n - 1
    let mut power = TruncatedSeries::one(n - 1);
    for m in 1..=n {
        power = power.mul(base.series()).expect("equal orders");
        out[m] = &power.coeffs()[m - 1] * ratio(1, m as i64);
    }
    DeltaSeries::new(TruncatedSeries::from_coeffs(out).expect("nonempty"))
        .expect("inverse of a delta series is a delta series")
}

/// `count`-fold self composition; `count = 0` gives the identity `x`.
pub fn iterate(f: &DeltaSeries, count: u32) -> DeltaSeries {
    let n = f.order_bound();
    let mut acc = DeltaSeries::identity(n).expect("delta series have order bound >= 1");
    for _ in 0..count {
        let composed = compose(f.series(), &acc.to_positive()).expect("equal orders");
        acc = DeltaSeries::new(composed).expect("composition of delta series is delta");
    }
    acc
}
