//! Exact truncated formal power series over the rationals, and the Riordan
//! group built on top of them.
//!
//! Every value carries an explicit truncation order `N`: coefficients
//! `0 ..= N` are stored exactly and nothing is claimed beyond `x^N`. Binary
//! operations require equal truncation orders and reject mismatches;
//! shrinking a window is always explicit (`retruncate`). Constructions that
//! mathematically determine fewer coefficients than their input window
//! (normal forms and roots of series with tail order `r > 1`, inner-series
//! solving) return their result at the reduced order instead of padding with
//! made-up coefficients.
//!
//! Layer by layer:
//!
//! - [`scalar`]: arbitrary-precision rationals in canonical reduced form.
//! - [`series`]: dense truncated series with ring arithmetic, multiplicative
//!   inversion of unit series, and the unit / delta / positive-order
//!   refinement types.
//! - [`compose`]: substitution, iteration, and the compositional inverse by
//!   two independent algorithms (triangular solve and Lagrange inversion).
//! - [`roots`]: n-th roots of series with constant term 1 via the binomial
//!   series, the normal form `a = a0 + ar * A^r`, roots of positive-order
//!   series, and solving `g(a(x)) = c(x)` for the inner series.
//! - [`riordan`]: Riordan group elements `(g, F)`, their triangular matrix
//!   blocks, order verification (full and product-only shortcut), the unique
//!   involution determined by a multiplier, and aeration.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything is safe to share across threads.

pub mod compose;
pub mod error;
pub mod riordan;
pub mod roots;
pub mod scalar;
pub mod series;

pub use compose::{compose, compositional_inverse, compositional_inverse_lagrange, iterate};
pub use error::{Error, NoInvolutionReason, Result};
pub use riordan::{
    aerate, aerate_to, aerated_involution, involution_diagnostics, involution_from_multiplier,
    CheckPath, DiagnosticShape, FallbackReason, InvolutionDiagnostic, OrderCheck, OrderCondition,
    OrderWitness, RiordanElement, ShortcutCheck, TriangularBlock,
};
pub use roots::{normal_form, positive_root, solve_inner, unit_root, NormalForm};
pub use scalar::{int, ratio, BigInt, Scalar};
pub use series::{DeltaSeries, PositiveSeries, SeriesClass, TruncatedSeries, UnitSeries};
