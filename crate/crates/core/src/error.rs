//! Error type shared by the whole crate.

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Binary operation on series with different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Coefficient index beyond the stored window.
    CoeffOutOfWindow { index: usize, order_bound: usize },
    /// Retruncation target exceeds the stored window.
    RetruncateBeyondWindow { requested: usize, order_bound: usize },
    /// The operation needs a larger truncation order than provided.
    OrderBoundTooSmall { needed: usize, got: usize },
    /// A series needs at least one coefficient.
    EmptyCoefficients,
    /// Monomial degree beyond the truncation order.
    DegreeOutOfWindow { degree: usize, order_bound: usize },
    /// Unit series require a nonzero constant term.
    ZeroConstantTerm,
    /// Delta and positive-order series require a zero constant term.
    NonzeroConstantTerm,
    /// Delta series require a nonzero linear coefficient.
    ZeroLinearCoefficient,
    /// The requested output window is not determined by the input window.
    WindowTooSmall { requested: usize, available: usize },
    /// Roots of degree zero are not defined.
    RootDegreeZero,
    /// `unit_root` requires constant term exactly one.
    ConstantTermNotOne,
    /// `normal_form` requires a non-constant series.
    ConstantSeries,
    /// `positive_root`: series order does not match the root degree.
    RootOrderMismatch {
        found: Option<usize>,
        expected: usize,
    },
    /// `positive_root`: the supplied leading coefficient is not a root of
    /// the leading term.
    LeadingRootMismatch,
    /// `solve_inner`: no inner series with the requested shape exists.
    NoInnerSeries(String),
    /// No Riordan involution exists for the given multiplier.
    NoInvolution(NoInvolutionReason),
    /// The element is not an involution.
    NotAnInvolution,
    /// Aeration strides must be positive odd integers.
    InvalidAerationStride { stride: u32 },
    /// A constructed result failed its own verification; this indicates a
    /// bug, not bad input.
    VerificationFailed(&'static str),
}

/// Why no involution with the requested multiplier can exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoInvolutionReason {
    /// The constant term squared is not one.
    ConstantTermSquareNotOne,
    /// The first nonzero index of `g - g0` is even; it must be odd.
    EvenTailOrder(usize),
    /// The multiplier is constant through its window, so the substitution
    /// part is not uniquely determined.
    ConstantMultiplier,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ: {left} vs {right}")
            }
            Error::CoeffOutOfWindow { index, order_bound } => write!(
                f,
                "coefficient {index} is beyond the truncation order {order_bound}"
            ),
            Error::RetruncateBeyondWindow {
                requested,
                order_bound,
            } => write!(
                f,
                "cannot retruncate to order {requested}: only {order_bound} stored"
            ),
            Error::OrderBoundTooSmall { needed, got } => {
                write!(f, "truncation order {got} too small: need at least {needed}")
            }
            Error::EmptyCoefficients => write!(f, "a series needs at least one coefficient"),
            Error::DegreeOutOfWindow {
                degree,
                order_bound,
            } => write!(
                f,
                "monomial degree {degree} exceeds the truncation order {order_bound}"
            ),
            Error::ZeroConstantTerm => {
                write!(f, "constant term is zero; a unit series requires it nonzero")
            }
            Error::NonzeroConstantTerm => {
                write!(f, "constant term must be zero for this series kind")
            }
            Error::ZeroLinearCoefficient => {
                write!(f, "linear coefficient is zero; a delta series requires it nonzero")
            }
            Error::WindowTooSmall {
                requested,
                available,
            } => write!(
                f,
                "requested window {requested} is not determined by the stored window {available}"
            ),
            Error::RootDegreeZero => write!(f, "root degree must be positive"),
            Error::ConstantTermNotOne => {
                write!(f, "constant term must be exactly 1 to take this root")
            }
            Error::ConstantSeries => {
                write!(f, "series is constant through its window; a nonzero tail is required")
            }
            Error::RootOrderMismatch { found, expected } => match found {
                Some(found) => write!(
                    f,
                    "series order {found} does not match the root degree {expected}"
                ),
                None => write!(
                    f,
                    "series is zero through its window; no root of degree {expected}"
                ),
            },
            Error::LeadingRootMismatch => write!(
                f,
                "supplied leading coefficient is not a root of the leading term"
            ),
            Error::NoInnerSeries(reason) => write!(f, "no inner series: {reason}"),
            Error::NoInvolution(reason) => write!(f, "no involution exists: {reason}"),
            Error::NotAnInvolution => write!(f, "the element is not an involution"),
            Error::InvalidAerationStride { stride } => {
                write!(f, "aeration stride must be a positive odd integer, got {stride}")
            }
            Error::VerificationFailed(what) => {
                write!(f, "internal verification failed: {what}")
            }
        }
    }
}

impl fmt::Display for NoInvolutionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoInvolutionReason::ConstantTermSquareNotOne => {
                write!(f, "the constant term squared must be 1")
            }
            NoInvolutionReason::EvenTailOrder(order) => write!(
                f,
                "the first nonzero index of g - g0 is {order}, which is even; it must be odd"
            ),
            NoInvolutionReason::ConstantMultiplier => write!(
                f,
                "the multiplier is constant through its window; the substitution part is not unique"
            ),
        }
    }
}

impl std::error::Error for Error {}
