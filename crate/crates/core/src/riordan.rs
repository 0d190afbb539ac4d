//! The Riordan group over exact rational series.
//!
//! An element is a pair of a unit series `g` (the multiplier) and a delta
//! series `F` (the substitution); it represents the infinite lower-triangular
//! matrix whose column `n` has generating function `g * F^n`. The product
//! follows the fundamental theorem: entrywise matrix multiplication equals
//! `(g, F) * (h, K) = (g * h(F), K(F))`.
//!
//! Order checks test `element^n = (1, x)` through the truncation window by
//! evaluating the two defining conditions: the multiplier product
//! `g * g(F) * ... * g(F^(n-1)) = 1` and the iterate `F^(n) = x`. For a
//! non-constant multiplier whose linear substitution coefficient satisfies
//! `f1^n = 1`, the product condition alone is decisive, which
//! [`RiordanElement::check_order_shortcut`] exploits.
//!
//! [`involution_from_multiplier`] builds, for a non-constant `g` with
//! `g0 = +-1` and odd tail order `r`, the unique substitution making
//! `(g, F)` an involution:
//! `F = Gbar( -G / (g0 * g)^(1/r) )` with `g = g0 + gr * G^r` in normal form.

use num_traits::{One, Zero};

use crate::compose::{compose, compositional_inverse, iterate};
use crate::error::{Error, NoInvolutionReason, Result};
use crate::roots::{normal_form, positive_root, unit_root};
use crate::scalar::{self, int, Scalar};
use crate::series::{DeltaSeries, PositiveSeries, TruncatedSeries, UnitSeries};

/// A Riordan group element `(g, F)`: unit multiplier and delta substitution
/// at a shared truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RiordanElement {
    multiplier: UnitSeries,
    substitution: DeltaSeries,
}

/// The leading `(N+1) x (N+1)` block of the matrix of a Riordan element.
/// Entry `(row, col)` is the coefficient of `x^row` in `g * F^col`; entries
/// above the diagonal are zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangularBlock {
    rows: Vec<Vec<Scalar>>,
}

/// Verdict of an order check through the truncation window.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrderCheck {
    /// `element^n = (1, x)` through the window.
    Holds,
    /// Some coefficient deviates; the witness points at the first one.
    Fails(OrderWitness),
}

impl OrderCheck {
    pub fn holds(&self) -> bool {
        matches!(self, OrderCheck::Holds)
    }
}

/// First failing coefficient of an order check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderWitness {
    pub condition: OrderCondition,
    /// Coefficient index at which the condition first fails.
    pub index: usize,
    pub expected: Scalar,
    pub found: Scalar,
}

/// Which of the two defining conditions a witness refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderCondition {
    /// `g * g(F) * ... * g(F^(n-1)) = 1`
    MultiplierProduct,
    /// `F^(n) = x`
    SubstitutionIterate,
}

/// Outcome of [`RiordanElement::check_order_shortcut`]: the verdict plus
/// which check actually ran.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShortcutCheck {
    pub verdict: OrderCheck,
    pub path: CheckPath,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckPath {
    /// Only the multiplier product was evaluated; the iterate condition
    /// follows from it under the shortcut preconditions.
    Shortcut,
    /// Preconditions unmet; the full two-condition check ran instead.
    Fallback(FallbackReason),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FallbackReason {
    /// The multiplier is constant through its window.
    ConstantMultiplier,
    /// The linear coefficient of the substitution does not satisfy
    /// `f1^n = 1`.
    LinearCoeffPowerNotOne,
}

/// Diagnostic of the necessary conditions for `(g, F)` to be an involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionDiagnostic {
    /// `g0^2 = 1`.
    pub constant_term_square_one: bool,
    pub shape: DiagnosticShape,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagnosticShape {
    /// `g` has a nonzero coefficient beyond index 0 within the window.
    NonConstant {
        /// First nonzero index of `g - g0`.
        tail_order: usize,
        tail_order_odd: bool,
        linear_coeff_minus_one: bool,
    },
    /// `g` is constant through the window; involutions are exactly `(-1, x)`
    /// and `(+-1, F)` with `F = -x + ...` a compositional involution.
    Constant {
        /// The element is `(1, x)`, which has order 1, not 2.
        is_identity: bool,
        is_negated_identity: bool,
        linear_coeff_minus_one: bool,
        substitution_self_inverse: bool,
    },
}

impl InvolutionDiagnostic {
    /// True when every necessary condition for an involution holds (and, in
    /// the constant-multiplier case, the sufficient ones too).
    pub fn conditions_met(&self) -> bool {
        self.constant_term_square_one
            && match &self.shape {
                DiagnosticShape::NonConstant {
                    tail_order_odd,
                    linear_coeff_minus_one,
                    ..
                } => *tail_order_odd && *linear_coeff_minus_one,
                DiagnosticShape::Constant {
                    is_identity,
                    is_negated_identity,
                    linear_coeff_minus_one,
                    substitution_self_inverse,
                } => {
                    !is_identity
                        && (*is_negated_identity
                            || (*linear_coeff_minus_one && *substitution_self_inverse))
                }
            }
    }
}

impl RiordanElement {
    pub fn new(multiplier: UnitSeries, substitution: DeltaSeries) -> Result<Self> {
        if multiplier.order_bound() != substitution.order_bound() {
            return Err(Error::OrderMismatch {
                left: multiplier.order_bound(),
                right: substitution.order_bound(),
            });
        }
        Ok(Self {
            multiplier,
            substitution,
        })
    }

    /// The identity element `(1, x)`.
    pub fn identity(order_bound: usize) -> Result<Self> {
        Ok(Self {
            multiplier: UnitSeries::new(TruncatedSeries::one(order_bound))
                .expect("1 is a unit"),
            substitution: DeltaSeries::identity(order_bound)?,
        })
    }

    pub fn order_bound(&self) -> usize {
        self.multiplier.order_bound()
    }

    pub fn multiplier(&self) -> &UnitSeries {
        &self.multiplier
    }

    pub fn substitution(&self) -> &DeltaSeries {
        &self.substitution
    }

    pub fn retruncate(&self, order_bound: usize) -> Result<Self> {
        Ok(Self {
            multiplier: self.multiplier.retruncate(order_bound)?,
            substitution: self.substitution.retruncate(order_bound)?,
        })
    }

    /// Group product `(g, F) * (h, K) = (g * h(F), K(F))`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.order_bound() != rhs.order_bound() {
            return Err(Error::OrderMismatch {
                left: self.order_bound(),
                right: rhs.order_bound(),
            });
        }
        let inner = self.substitution.to_positive();
        let multiplier = self
            .multiplier
            .series()
            .mul(&compose(rhs.multiplier.series(), &inner)?)?;
        let substitution = compose(rhs.substitution.series(), &inner)?;
        Ok(Self {
            multiplier: UnitSeries::new(multiplier)
                .expect("product of unit constant terms is nonzero"),
            substitution: DeltaSeries::new(substitution)
                .expect("product of linear coefficients is nonzero"),
        })
    }

    /// Group inverse `(1 / g(Fbar), Fbar)` with `Fbar` the compositional
    /// inverse of `F`.
    pub fn inverse(&self) -> Self {
        let fbar = compositional_inverse(&self.substitution);
        let g_at_fbar = compose(self.multiplier.series(), &fbar.to_positive())
            .expect("equal orders by construction");
        let multiplier = UnitSeries::new(g_at_fbar)
            .expect("composition keeps the constant term")
            .recip();
        Self {
            multiplier,
            substitution: fbar,
        }
    }

    /// Expand the leading `(N+1) x (N+1)` matrix block; column `n` is
    /// `g * F^n`, with the powers of `F` accumulated incrementally.
    pub fn to_matrix(&self) -> TriangularBlock {
        let n = self.order_bound();
        let mut rows = vec![vec![Scalar::zero(); n + 1]; n + 1];
        let mut column_gen = self.multiplier.series().clone();
        for col in 0..=n {
            if col > 0 {
                column_gen = column_gen
                    .mul(self.substitution.series())
                    .expect("equal orders by construction");
            }
            for row in col..=n {
                rows[row][col] = column_gen.coeffs()[row].clone();
            }
        }
        TriangularBlock { rows }
    }

    /// The multiplier product `g * g(F) * ... * g(F^(n-1))` and the iterate
    /// `F^(n)`, both through the window.
    fn power_conditions(&self, n: u32) -> (TruncatedSeries, TruncatedSeries) {
        let order = self.order_bound();
        let mut product = TruncatedSeries::one(order);
        let mut iterate_k = DeltaSeries::identity(order)
            .expect("riordan elements have order bound >= 1")
            .into_series();
        for k in 0..n {
            if k == 0 {
                // F^(0) = x: composing with it is the identity map
                product = self.multiplier.series().clone();
                iterate_k = self.substitution.series().clone();
                continue;
            }
            let inner = PositiveSeries::new(iterate_k.clone())
                .expect("iterates of delta series have zero constant term");
            product = product
                .mul(&compose(self.multiplier.series(), &inner).expect("equal orders"))
                .expect("equal orders");
            iterate_k =
                compose(self.substitution.series(), &inner).expect("equal orders");
        }
        (product, iterate_k)
    }

    /// Test `element^n = (1, x)` through the window by evaluating both
    /// defining conditions; on failure the witness reports the first
    /// deviating coefficient (multiplier product first).
    pub fn check_order(&self, n: u32) -> OrderCheck {
        let (product, iterated) = self.power_conditions(n);
        if let Some(witness) =
            first_mismatch(&product, &TruncatedSeries::one(self.order_bound()), OrderCondition::MultiplierProduct)
        {
            return OrderCheck::Fails(witness);
        }
        let x = DeltaSeries::identity(self.order_bound())
            .expect("order bound >= 1")
            .into_series();
        if let Some(witness) =
            first_mismatch(&iterated, &x, OrderCondition::SubstitutionIterate)
        {
            return OrderCheck::Fails(witness);
        }
        OrderCheck::Holds
    }

    /// Like [`check_order`](Self::check_order) but, when the multiplier is
    /// non-constant and `f1^n = 1`, only the multiplier product is evaluated;
    /// the iterate condition then comes for free. Falls back to the full
    /// check when the preconditions do not hold, and reports which path ran.
    pub fn check_order_shortcut(&self, n: u32) -> ShortcutCheck {
        let g = self.multiplier.series();
        let non_constant = g.coeffs()[1..].iter().any(|c| !c.is_zero());
        if !non_constant {
            return ShortcutCheck {
                verdict: self.check_order(n),
                path: CheckPath::Fallback(FallbackReason::ConstantMultiplier),
            };
        }
        if !scalar::pow(self.substitution.linear_coeff(), n).is_one() {
            return ShortcutCheck {
                verdict: self.check_order(n),
                path: CheckPath::Fallback(FallbackReason::LinearCoeffPowerNotOne),
            };
        }
        let (product, _) = self.power_conditions(n);
        let verdict = match first_mismatch(
            &product,
            &TruncatedSeries::one(self.order_bound()),
            OrderCondition::MultiplierProduct,
        ) {
            Some(witness) => OrderCheck::Fails(witness),
            None => OrderCheck::Holds,
        };
        ShortcutCheck {
            verdict,
            path: CheckPath::Shortcut,
        }
    }
}

fn first_mismatch(
    found: &TruncatedSeries,
    expected: &TruncatedSeries,
    condition: OrderCondition,
) -> Option<OrderWitness> {
    found
        .coeffs()
        .iter()
        .zip(expected.coeffs())
        .position(|(f, e)| f != e)
        .map(|index| OrderWitness {
            condition,
            index,
            expected: expected.coeffs()[index].clone(),
            found: found.coeffs()[index].clone(),
        })
}

impl TriangularBlock {
    /// The identity block.
    pub fn identity(order_bound: usize) -> Self {
        let mut rows = vec![vec![Scalar::zero(); order_bound + 1]; order_bound + 1];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Scalar::one();
        }
        Self { rows }
    }

    /// Number of rows (= columns).
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Exact product of leading blocks. Lower-triangular blocks are closed
    /// under multiplication, so this equals the leading block of the product
    /// of the infinite matrices.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.size() != rhs.size() {
            return Err(Error::OrderMismatch {
                left: self.size() - 1,
                right: rhs.size() - 1,
            });
        }
        let n = self.size();
        let mut rows = vec![vec![Scalar::zero(); n]; n];
        for row in 0..n {
            for col in 0..=row {
                let mut acc = Scalar::zero();
                for k in col..=row {
                    if !self.rows[row][k].is_zero() && !rhs.rows[k][col].is_zero() {
                        acc += &self.rows[row][k] * &rhs.rows[k][col];
                    }
                }
                rows[row][col] = acc;
            }
        }
        Ok(Self { rows })
    }
}

/// Report which of the necessary involution conditions hold for an element.
pub fn involution_diagnostics(element: &RiordanElement) -> InvolutionDiagnostic {
    let g = element.multiplier().series();
    let g0 = element.multiplier().constant_term();
    let constant_term_square_one = (g0 * g0).is_one();
    let tail_order = g.coeffs()[1..]
        .iter()
        .position(|c| !c.is_zero())
        .map(|i| i + 1);
    let f = element.substitution();
    let minus_one = int(-1);
    let shape = match tail_order {
        Some(tail_order) => DiagnosticShape::NonConstant {
            tail_order,
            tail_order_odd: tail_order % 2 == 1,
            linear_coeff_minus_one: f.linear_coeff() == &minus_one,
        },
        None => {
            let x = DeltaSeries::identity(element.order_bound())
                .expect("order bound >= 1");
            DiagnosticShape::Constant {
                is_identity: g0.is_one() && f == &x,
                is_negated_identity: g0 == &minus_one && f == &x,
                linear_coeff_minus_one: f.linear_coeff() == &minus_one,
                substitution_self_inverse: iterate(f, 2) == x,
            }
        }
    };
    InvolutionDiagnostic {
        constant_term_square_one,
        shape,
    }
}

/// The unique substitution `F` making `(g, F)` an involution, for a
/// non-constant multiplier with `g0 = +-1` and odd tail order `r`:
///
/// `F = Gbar( -G(x) / (g0 * g(x))^(1/r) )`
///
/// with `g = g0 + gr * G^r` in normal form. The result is verified through
/// its window with the shortcut order check before being returned, and comes
/// back at order `N - r + 1`, the window the input determines.
pub fn involution_from_multiplier(multiplier: &UnitSeries) -> Result<RiordanElement> {
    let g = multiplier.series();
    let g0 = multiplier.constant_term().clone();
    if !(&g0 * &g0).is_one() {
        return Err(Error::NoInvolution(
            NoInvolutionReason::ConstantTermSquareNotOne,
        ));
    }
    let form = normal_form(g).map_err(|err| match err {
        Error::ConstantSeries => Error::NoInvolution(NoInvolutionReason::ConstantMultiplier),
        other => other,
    })?;
    let r = form.tail_order();
    if r % 2 == 0 {
        return Err(Error::NoInvolution(NoInvolutionReason::EvenTailOrder(r)));
    }
    let reduced_order = form.monic().order_bound(); // N - r + 1

    // (g0 * g)^(1/r): constant term g0^2 = 1, so the unit root applies.
    let scaled = UnitSeries::new(g.scale(&g0)).expect("g0 is nonzero");
    let root = unit_root(&scaled, r as u32)?.retruncate(reduced_order)?;
    let inner = form
        .monic()
        .series()
        .neg()
        .mul(root.recip().series())?;
    let substitution = DeltaSeries::new(compose(
        compositional_inverse(form.monic()).series(),
        &PositiveSeries::new(inner)?,
    )?)
    .expect("linear coefficient is -1");

    let element = RiordanElement::new(multiplier.retruncate(reduced_order)?, substitution)?;
    match element.check_order_shortcut(2).verdict {
        OrderCheck::Holds => Ok(element),
        OrderCheck::Fails(_) => Err(Error::VerificationFailed(
            "constructed involution failed its order-2 check",
        )),
    }
}

/// Spread coefficients onto multiples of `stride`: coefficient `stride * i`
/// of the result is coefficient `i` of the input, zero elsewhere. Same
/// truncation order as the input; the stride must be a positive odd integer.
pub fn aerate(series: &TruncatedSeries, stride: u32) -> Result<TruncatedSeries> {
    aerate_to(series, stride, series.order_bound())
}

/// [`aerate`] with an explicit output order. Exact as long as the input
/// window covers index `out_order / stride`.
pub fn aerate_to(
    series: &TruncatedSeries,
    stride: u32,
    out_order: usize,
) -> Result<TruncatedSeries> {
    if stride == 0 || stride % 2 == 0 {
        return Err(Error::InvalidAerationStride { stride });
    }
    let stride = stride as usize;
    let max_index = out_order / stride;
    if max_index > series.order_bound() {
        return Err(Error::WindowTooSmall {
            requested: max_index,
            available: series.order_bound(),
        });
    }
    let mut coeffs = vec![Scalar::zero(); out_order + 1];
    for (i, c) in series.coeffs().iter().take(max_index + 1).enumerate() {
        coeffs[stride * i] = c.clone();
    }
    Ok(TruncatedSeries { coeffs })
}

/// From a verified involution `(g, F)` with non-constant `g` and a positive
/// odd `stride` q, build the involution with aerated multiplier
/// `h(x) = g(x^q)`: its substitution is `K = (F(x^q))^(1/q)` taken with
/// leading coefficient -1.
///
/// `F(x^q)` is exact beyond the input window (the inserted coefficients are
/// structurally zero), so `K` comes back at the full input order. The result
/// is checked to be an involution and cross-checked against the direct
/// construction from `h` before being returned.
pub fn aerated_involution(element: &RiordanElement, stride: u32) -> Result<RiordanElement> {
    if stride == 0 || stride % 2 == 0 {
        return Err(Error::InvalidAerationStride { stride });
    }
    if !element.check_order(2).holds() {
        return Err(Error::NotAnInvolution);
    }
    let g = element.multiplier();
    let tail_order = g.series().coeffs()[1..]
        .iter()
        .position(|c| !c.is_zero())
        .map(|i| i + 1)
        .ok_or(Error::NoInvolution(NoInvolutionReason::ConstantMultiplier))?;
    if stride == 1 {
        return Ok(element.clone());
    }
    let n = element.order_bound();
    let q = stride as usize;

    let aerated_multiplier = UnitSeries::new(aerate(g.series(), stride)?)
        .expect("aeration keeps the constant term");
    // F(x^q) through n + q - 1; needs F through (n + q - 1) / q <= n.
    let spread = aerate_to(element.substitution().series(), stride, n + q - 1)?;
    let substitution = positive_root(&PositiveSeries::new(spread)?, stride, &int(-1))?;
    debug_assert_eq!(substitution.order_bound(), n);

    let candidate = RiordanElement::new(aerated_multiplier, substitution)?;
    if !candidate.check_order_shortcut(2).verdict.holds() {
        return Err(Error::VerificationFailed(
            "aerated pair failed its order-2 check",
        ));
    }

    // Cross-check against the direct construction from the aerated
    // multiplier; both pin the same unique substitution.
    let aerated_tail_order = q * tail_order;
    let wanted = n + aerated_tail_order - 1;
    let reachable = q * g.order_bound() + q - 1;
    let extended_order = wanted.min(reachable);
    let extended = UnitSeries::new(aerate_to(g.series(), stride, extended_order)?)
        .expect("aeration keeps the constant term");
    let direct = involution_from_multiplier(&extended)?;
    let compare_order = direct.order_bound().min(n);
    if direct.substitution().retruncate(compare_order)?
        != candidate.substitution().retruncate(compare_order)?
    {
        return Err(Error::VerificationFailed(
            "aerated substitution disagrees with the direct construction",
        ));
    }
    Ok(candidate)
}
