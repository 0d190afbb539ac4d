//! Truncated formal power series with exact rational coefficients.
//!
//! A `TruncatedSeries` stores the coefficients of `x^0 .. x^N` densely for an
//! explicit truncation order `N`. Invariants:
//!
//! - `coeffs` has exactly `N + 1` entries; entry `i` is the exact coefficient
//!   of `x^i` of the represented series.
//! - Two series are equal iff their orders agree and all coefficients agree.
//! - Binary operations require equal truncation orders and reject mismatches
//!   instead of silently truncating; use [`TruncatedSeries::retruncate`] to
//!   shrink a window explicitly.
//!
//! The refinements [`UnitSeries`] (nonzero constant term), [`DeltaSeries`]
//! (zero constant term, nonzero linear term) and [`PositiveSeries`] (zero
//! constant term) check their defining condition at construction, so the
//! operations that need them never see malformed input.

use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense truncated series: coefficients of `x^0 ..= x^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    pub(crate) coeffs: Vec<Scalar>,
}

/// Where a series sits in the unit / delta / positive-order hierarchy.
///
/// Every series falls in exactly one class; delta series are reported as
/// `Delta` rather than the weaker `Positive`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesClass {
    /// Nonzero constant term; invertible under multiplication.
    Unit,
    /// Zero constant term, nonzero linear term; invertible under composition.
    Delta,
    /// Zero constant term, first nonzero coefficient at index >= 2.
    Positive,
    /// All stored coefficients are zero.
    Zero,
}

impl TruncatedSeries {
    /// Series from an explicit coefficient vector; entry `i` is the
    /// coefficient of `x^i`, so the truncation order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        Ok(Self { coeffs })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::from_coeffs(values.iter().map(|&v| crate::scalar::int(v)).collect())
    }

    /// The zero series at the given truncation order.
    pub fn zero(order_bound: usize) -> Self {
        Self {
            coeffs: vec![Scalar::zero(); order_bound + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order_bound: usize) -> Self {
        Self::constant(Scalar::one(), order_bound)
    }

    /// A constant series.
    pub fn constant(value: Scalar, order_bound: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); order_bound + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// `value * x^degree` at the given truncation order.
    pub fn monomial(value: Scalar, degree: usize, order_bound: usize) -> Result<Self> {
        if degree > order_bound {
            return Err(Error::DegreeOutOfWindow {
                degree,
                order_bound,
            });
        }
        let mut coeffs = vec![Scalar::zero(); order_bound + 1];
        coeffs[degree] = value;
        Ok(Self { coeffs })
    }

    /// Truncation order `N`: the highest stored coefficient index.
    pub fn order_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All stored coefficients, index `i` holding the coefficient of `x^i`.
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^index`; rejects indices beyond the window instead of
    /// inventing zeros for unknown coefficients.
    pub fn coeff(&self, index: usize) -> Result<&Scalar> {
        self.coeffs.get(index).ok_or(Error::CoeffOutOfWindow {
            index,
            order_bound: self.order_bound(),
        })
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True if all stored coefficients are zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Classify by constant and leading behaviour.
    pub fn classify(&self) -> SeriesClass {
        match self.order() {
            None => SeriesClass::Zero,
            Some(0) => SeriesClass::Unit,
            Some(1) => SeriesClass::Delta,
            Some(_) => SeriesClass::Positive,
        }
    }

    /// Shrink the window to `order_bound <= N`.
    pub fn retruncate(&self, order_bound: usize) -> Result<Self> {
        if order_bound > self.order_bound() {
            return Err(Error::RetruncateBeyondWindow {
                requested: order_bound,
                order_bound: self.order_bound(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order_bound].to_vec(),
        })
    }

    /// Coefficientwise sum; both operands must share the truncation order.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Coefficientwise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Coefficientwise negation.
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, factor: &Scalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated to the shared order: coefficient `n` of the
    /// result is `sum_{i=0..n} a_i * b_{n-i}`, exact.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_order(other)?;
        let n = self.order_bound();
        let mut acc = vec![Scalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: acc })
    }

    /// Repeated product at the same truncation order; `exp = 0` gives 1.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order_bound());
        for _ in 0..exp {
            acc = acc.mul(self).expect("equal orders by construction");
        }
        acc
    }

    /// Multiply by `x^k`. The result is exact through `N + k`, so the window
    /// grows: no coefficient is invented.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + k] = c.clone();
        }
        Self { coeffs }
    }

    /// Divide by `x^k`; the first `k` coefficients must be zero and the
    /// window shrinks to `N - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order_bound() {
            return Err(Error::OrderBoundTooSmall {
                needed: k,
                got: self.order_bound(),
            });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Zero-pad up to `order_bound`. Only sound where the padded entries
    /// provably cannot influence the requested result (see callers).
    pub(crate) fn padded_to(&self, order_bound: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order_bound + 1, Scalar::zero());
        Self { coeffs }
    }

    fn check_same_order(&self, other: &Self) -> Result<()> {
        if self.order_bound() != other.order_bound() {
            return Err(Error::OrderMismatch {
                left: self.order_bound(),
                right: other.order_bound(),
            });
        }
        Ok(())
    }
}

fn write_abs_term(f: &mut fmt::Formatter<'_>, coeff: &Scalar, power: usize) -> fmt::Result {
    let a = coeff.abs();
    if power == 0 {
        return write!(f, "{a}");
    }
    if !a.is_one() {
        write!(f, "{a}*")?;
    }
    if power == 1 {
        write!(f, "x")
    } else {
        write!(f, "x^{power}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if i > 0 && c.is_negative() {
                    write!(f, "-")?;
                }
                if i == 0 {
                    write!(f, "{c}")?;
                } else {
                    write_abs_term(f, c, i)?;
                }
                first = false;
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                write_abs_term(f, c, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Series with nonzero constant term: invertible under multiplication.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitSeries(TruncatedSeries);

impl UnitSeries {
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if series.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self(series))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }

    pub fn order_bound(&self) -> usize {
        self.0.order_bound()
    }

    pub fn constant_term(&self) -> &Scalar {
        &self.0.coeffs[0]
    }

    pub fn retruncate(&self, order_bound: usize) -> Result<Self> {
        Ok(Self(self.0.retruncate(order_bound)?))
    }

    /// Product of unit series is a unit series.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.mul(&other.0)?))
    }

    /// Power at the same truncation order; units are closed under products.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self(TruncatedSeries::one(self.order_bound()));
        for _ in 0..exp {
            acc = acc.mul(self).expect("equal orders by construction");
        }
        acc
    }

    /// Multiplicative inverse through the window: `self * recip(self) = 1`.
    ///
    /// Solves the convolution triangularly: `c_0 = 1/a_0` and
    /// `c_m = -(sum_{k=1..m} a_k c_{m-k}) / a_0`.
    pub fn recip(&self) -> UnitSeries {
        let a = &self.0.coeffs;
        let n = self.order_bound();
        let inv0 = a[0].recip();
        let mut out = vec![Scalar::zero(); n + 1];
        out[0] = inv0.clone();
        for m in 1..=n {
            let mut acc = Scalar::zero();
            for k in 1..=m {
                if !a[k].is_zero() && !out[m - k].is_zero() {
                    acc += &a[k] * &out[m - k];
                }
            }
            if !acc.is_zero() {
                out[m] = -(acc * &inv0);
            }
        }
        UnitSeries(TruncatedSeries { coeffs: out })
    }
}

impl From<UnitSeries> for TruncatedSeries {
    fn from(value: UnitSeries) -> Self {
        value.0
    }
}

impl fmt::Display for UnitSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Series with zero constant term and nonzero linear term: invertible under
/// composition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaSeries(TruncatedSeries);

impl DeltaSeries {
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if !series.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if series.coeffs.len() < 2 || series.coeffs[1].is_zero() {
            return Err(Error::ZeroLinearCoefficient);
        }
        Ok(Self(series))
    }

    /// The identity `x` at the given truncation order (at least 1).
    pub fn identity(order_bound: usize) -> Result<Self> {
        if order_bound < 1 {
            return Err(Error::OrderBoundTooSmall {
                needed: 1,
                got: order_bound,
            });
        }
        Ok(Self(
            TruncatedSeries::monomial(Scalar::one(), 1, order_bound)
                .expect("degree 1 fits any order bound >= 1"),
        ))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }

    pub fn order_bound(&self) -> usize {
        self.0.order_bound()
    }

    /// The coefficient of `x`, nonzero by construction.
    pub fn linear_coeff(&self) -> &Scalar {
        &self.0.coeffs[1]
    }

    pub fn retruncate(&self, order_bound: usize) -> Result<Self> {
        if order_bound < 1 {
            return Err(Error::OrderBoundTooSmall {
                needed: 1,
                got: order_bound,
            });
        }
        Ok(Self(self.0.retruncate(order_bound)?))
    }

    /// View as a positive-order series (every delta series is one).
    pub fn to_positive(&self) -> PositiveSeries {
        PositiveSeries(self.0.clone())
    }
}

impl From<DeltaSeries> for TruncatedSeries {
    fn from(value: DeltaSeries) -> Self {
        value.0
    }
}

impl From<DeltaSeries> for PositiveSeries {
    fn from(value: DeltaSeries) -> Self {
        PositiveSeries(value.0)
    }
}

impl fmt::Display for DeltaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Series with zero constant term. The window cannot distinguish the zero
/// series from one whose first nonzero coefficient lies beyond `N`, so the
/// zero series is admitted and [`PositiveSeries::order`] returns `None` for
/// it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PositiveSeries(TruncatedSeries);

impl PositiveSeries {
    pub fn new(series: TruncatedSeries) -> Result<Self> {
        if !series.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        Ok(Self(series))
    }

    pub fn series(&self) -> &TruncatedSeries {
        &self.0
    }

    pub fn into_series(self) -> TruncatedSeries {
        self.0
    }

    pub fn order_bound(&self) -> usize {
        self.0.order_bound()
    }

    /// Index of the first nonzero coefficient (>= 1), `None` if zero
    /// through the window.
    pub fn order(&self) -> Option<usize> {
        self.0.order()
    }

    pub fn retruncate(&self, order_bound: usize) -> Result<Self> {
        Ok(Self(self.0.retruncate(order_bound)?))
    }

    /// `self^exp` exact through `out_order`, which may exceed the stored
    /// window: a term of `self^exp` touching `x^m` uses base coefficients up
    /// to index `m - (exp-1)*order(self)` only, so the result is determined
    /// as long as that stays within the window.
    pub fn pow_to(&self, exp: u32, out_order: usize) -> Result<TruncatedSeries> {
        if exp == 0 {
            return Ok(TruncatedSeries::one(out_order));
        }
        let n = self.order_bound();
        match self.order() {
            None => {
                // True order is at least N + 1, so self^exp vanishes through
                // exp*(N+1) - 1.
                let known_through = exp as usize * (n + 1) - 1;
                if out_order > known_through {
                    return Err(Error::WindowTooSmall {
                        requested: out_order,
                        available: known_through,
                    });
                }
                Ok(TruncatedSeries::zero(out_order))
            }
            Some(ord) => {
                let known_through = n + (exp as usize - 1) * ord;
                if out_order > known_through {
                    return Err(Error::WindowTooSmall {
                        requested: out_order,
                        available: known_through,
                    });
                }
                let base = if out_order <= n {
                    self.0.retruncate(out_order)?
                } else {
                    self.0.padded_to(out_order)
                };
                Ok(base.pow(exp))
            }
        }
    }
}

impl From<PositiveSeries> for TruncatedSeries {
    fn from(value: PositiveSeries) -> Self {
        value.0
    }
}

impl fmt::Display for PositiveSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
