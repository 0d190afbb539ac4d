//! Multiplicative roots and normal forms.
//!
//! The central fact: a series with constant term exactly 1 has a unique n-th
//! root with constant term 1, given by the binomial series
//! `sum_j C(1/n, j) * A^j` for `A = a - 1`. The sum is finite at a fixed
//! truncation order because `A` has positive order. Everything else here
//! reduces to that root:
//!
//! - the normal form `a = a0 + ar * A^r` with `A = x * (tail/ar)^(1/r)` monic,
//! - roots of positive-order series with a prescribed leading coefficient,
//! - solving `g(a(x)) = c(x)` for the inner series `a`, which also shows
//!   cancellation: `g(a) = g(b)` with matching leading terms forces `a = b`.
//!
//! Operations in this module return results at the order through which the
//! input window actually determines them. Taking the normal form of a series
//! whose tail starts at `x^r` costs `r - 1` coefficients of window: the monic
//! part comes back at order `N - r + 1`.

use num_traits::{One, Zero};

use crate::compose::{compose, compositional_inverse};
use crate::error::{Error, Result};
use crate::scalar::{self, int, ratio, Scalar};
use crate::series::{DeltaSeries, PositiveSeries, TruncatedSeries, UnitSeries};

/// Decomposition of a non-constant series as `constant + leading * monic^r`,
/// where `monic = x + ...` is a monic delta series and `r` is the first
/// nonzero index of the tail.
///
/// The decomposition is unique; `monic` is stored at order `N - r + 1`, which
/// is exactly the window the input determines, and that window suffices to
/// reconstruct the input through `N` because raising a delta series to the
/// r-th power extends the window by `r - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    constant: Scalar,
    leading: Scalar,
    tail_order: usize,
    monic: DeltaSeries,
}

impl NormalForm {
    /// The constant term of the decomposed series.
    pub fn constant_term(&self) -> &Scalar {
        &self.constant
    }

    /// The coefficient of `x^r` of the decomposed series, nonzero.
    pub fn leading_coeff(&self) -> &Scalar {
        &self.leading
    }

    /// `r`: the first nonzero index of `series - constant`.
    pub fn tail_order(&self) -> usize {
        self.tail_order
    }

    /// The monic delta factor `x + ...`.
    pub fn monic(&self) -> &DeltaSeries {
        &self.monic
    }

    /// Rebuild `constant + leading * monic^r` through `order_bound`; exact up
    /// to the original input order.
    pub fn reconstruct(&self, order_bound: usize) -> Result<TruncatedSeries> {
        let power = self
            .monic
            .to_positive()
            .pow_to(self.tail_order as u32, order_bound)?;
        TruncatedSeries::constant(self.constant.clone(), order_bound).add(&power.scale(&self.leading))
    }
}

/// The unique `degree`-th root with constant term 1 of a series with constant
/// term exactly 1, via the binomial series `sum_j C(1/degree, j) * A^j` with
/// `A = series - 1`. Terms with `j * order(A) > N` vanish, so the sum is
/// finite. Same truncation order as the input.
pub fn unit_root(series: &UnitSeries, degree: u32) -> Result<UnitSeries> {
    if degree == 0 {
        return Err(Error::RootDegreeZero);
    }
    if !series.constant_term().is_one() {
        return Err(Error::ConstantTermNotOne);
    }
    let n = series.order_bound();
    let tail = series.series().sub(&TruncatedSeries::one(n))?;
    let Some(tail_order) = tail.order() else {
        return Ok(UnitSeries::new(TruncatedSeries::one(n)).expect("1 is a unit"));
    };
    let alpha = ratio(1, i64::from(degree));
    let mut acc = TruncatedSeries::one(n);
    let mut power = TruncatedSeries::one(n);
    let mut binomial = Scalar::one();
    for j in 1..=(n / tail_order) {
        binomial = binomial * (&alpha - int(j as i64 - 1)) / int(j as i64);
        if binomial.is_zero() {
            // alpha is a smaller non-negative integer (degree = 1); all later
            // binomial coefficients vanish as well.
            break;
        }
        power = power.mul(&tail)?;
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power.scale(&binomial))?;
    }
    Ok(UnitSeries::new(acc).expect("constant term stays 1"))
}

/// Rescale the tail of `series` starting at `offset` into a unit series with
/// constant term 1: coefficient `i` of the result is
/// `series[offset + i] / series[offset]`.
fn normalized_tail(series: &TruncatedSeries, offset: usize) -> UnitSeries {
    let lead = &series.coeffs()[offset];
    let coeffs = series.coeffs()[offset..]
        .iter()
        .map(|c| c / lead)
        .collect::<Vec<_>>();
    UnitSeries::new(TruncatedSeries::from_coeffs(coeffs).expect("nonempty tail"))
        .expect("normalized leading coefficient is 1")
}

/// Unique decomposition of a non-constant series as
/// `constant + leading * (x * tail_hat^(1/r))^r`.
pub fn normal_form(series: &TruncatedSeries) -> Result<NormalForm> {
    let coeffs = series.coeffs();
    let constant = coeffs[0].clone();
    let tail_order = (1..coeffs.len())
        .find(|&i| !coeffs[i].is_zero())
        .ok_or(Error::ConstantSeries)?;
    let leading = coeffs[tail_order].clone();
    let hat = normalized_tail(series, tail_order);
    let root = unit_root(&hat, tail_order as u32)?;
    let monic = DeltaSeries::new(root.series().shift_up(1))
        .expect("shifted unit series is monic delta");
    Ok(NormalForm {
        constant,
        leading,
        tail_order,
        monic,
    })
}

/// The `degree`-th root of a positive-order series whose order equals
/// `degree`, with prescribed leading coefficient `leading_root` satisfying
/// `leading_root^degree = leading term`. Returns `leading_root * monic` from
/// the normal form; the result is a delta series at order `N - degree + 1`
/// and is the unique root with that leading coefficient.
pub fn positive_root(
    series: &PositiveSeries,
    degree: u32,
    leading_root: &Scalar,
) -> Result<DeltaSeries> {
    if degree == 0 {
        return Err(Error::RootDegreeZero);
    }
    let found = series.order();
    if found != Some(degree as usize) {
        return Err(Error::RootOrderMismatch {
            found,
            expected: degree as usize,
        });
    }
    let form = normal_form(series.series())?;
    if &scalar::pow(leading_root, degree) != form.leading_coeff() {
        return Err(Error::LeadingRootMismatch);
    }
    DeltaSeries::new(form.monic().series().scale(leading_root))
}

/// Solve `outer(a(x)) = target(x)` for the inner series
/// `a = leading * x^inner_order + ...`.
///
/// With `outer = g0 + gr * G^r` in normal form, the equation becomes
/// `G(a)^r = (target - g0) / gr`; the right-hand side must have order
/// `r * inner_order` and leading term `leading^r`. Its normalized tail has an
/// r-th root with constant term 1, which pins `G(a)`, and applying the
/// compositional inverse of `G` recovers `a`. The answer is verified by
/// composition before returning, so inconsistent input yields an error rather
/// than a wrong series. Output order: `N - (r - 1) * inner_order`.
pub fn solve_inner(
    outer: &TruncatedSeries,
    target: &TruncatedSeries,
    leading: &Scalar,
    inner_order: usize,
) -> Result<PositiveSeries> {
    if outer.order_bound() != target.order_bound() {
        return Err(Error::OrderMismatch {
            left: outer.order_bound(),
            right: target.order_bound(),
        });
    }
    if inner_order == 0 {
        return Err(Error::NoInnerSeries(
            "the inner series must have positive order".into(),
        ));
    }
    if leading.is_zero() {
        return Err(Error::NoInnerSeries(
            "the inner series must have a nonzero leading coefficient".into(),
        ));
    }
    let form = normal_form(outer)?;
    let r = form.tail_order();
    let n = outer.order_bound();

    let shifted = target.sub(&TruncatedSeries::constant(form.constant_term().clone(), n))?;
    let rhs = shifted.scale(&form.leading_coeff().recip());

    let rhs_order = r * inner_order;
    match rhs.order() {
        Some(found) if found == rhs_order => {}
        found => {
            return Err(Error::NoInnerSeries(format!(
                "(target - g0)/gr must have order {rhs_order} (= {r} * {inner_order}), found {found:?}"
            )));
        }
    }
    if rhs.coeffs()[rhs_order] != scalar::pow(leading, r as u32) {
        return Err(Error::NoInnerSeries(
            "the leading coefficient is inconsistent with the target".into(),
        ));
    }

    // G(a) = leading * x^inner_order * (normalized tail of rhs)^(1/r)
    let hat = normalized_tail(&rhs, rhs_order);
    let hat_root = unit_root(&hat, r as u32)?;
    let composed_image = hat_root.series().shift_up(inner_order).scale(leading);
    let out_order = composed_image.order_bound(); // n - r*inner_order + inner_order

    let inverse_monic = compositional_inverse(form.monic()).retruncate(out_order)?;
    let inner = compose(
        inverse_monic.series(),
        &PositiveSeries::new(composed_image)?,
    )?;

    let check = compose(&outer.retruncate(out_order)?, &PositiveSeries::new(inner.clone())?)?;
    if check != target.retruncate(out_order)? {
        return Err(Error::NoInnerSeries(
            "verification failed: no inner series reproduces the target".into(),
        ));
    }
    PositiveSeries::new(inner)
}
