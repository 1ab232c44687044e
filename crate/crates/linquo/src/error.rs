//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("denominator is zero in the coefficient field")]
    ZeroDenominator,
    #[error("modulus {0} is not an odd prime below 2^31")]
    BadModulus(u64),
}

/// Failure while reading the polynomial grammar or an input file.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {at}")]
    UnexpectedChar { found: char, at: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed integer literal `{0}`")]
    BadInteger(String),
    #[error("empty polynomial")]
    Empty,
    #[error("term of degree {found} in a polynomial of degree {expected}: only homogeneous polynomials are supported")]
    MixedDegrees { expected: u32, found: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0}")]
    File(String),
}

/// An ill-formed ideal presentation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("generators have mixed degrees: {0} and {1}")]
    MixedDegrees(u32, u32),
    #[error("generator {0} is not a monomial")]
    NotMonomial(usize),
    #[error("no generators")]
    Empty,
    #[error("generators are K-linearly dependent in their degree; pass a minimal generating set")]
    DependentGenerators,
    #[error("linear-forms presentation must have degree 1, found {0}")]
    NotLinear(u32),
    #[error("expected kind {expected}, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
}

/// Linear-quotients certification failed at step `k` (1-based position in the
/// ordering): the colon ideal there needs a generator of degree at least 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("colon ideal at step k={k} is not generated by linear forms (offending minimal generators: {witness})")]
pub struct CertifyFailure {
    pub k: usize,
    pub witness: String,
}

/// A user-supplied certificate that does not verify.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate covers {found} steps, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("certificate form at step k={k} is not a linear form")]
    NotLinearForm { k: usize },
    #[error("certificate forms at step k={k} are K-linearly dependent")]
    DependentForms { k: usize },
    #[error("certificate form {index} at step k={k} does not multiply f_k into the prefix ideal")]
    NotInColon { k: usize, index: usize },
    #[error("certificate forms at step k={k} do not span the linear part of the colon (listed {listed}, actual {actual})")]
    DoesNotSpan { k: usize, listed: usize, actual: usize },
}

/// Failure while assembling a resolution.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("lift failed at step k={k}, homological position {position}: the certificate does not describe linear quotients")]
    LiftFailed { k: usize, position: usize },
    #[error("dependent linear forms passed to the Koszul construction")]
    DependentForms,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}
