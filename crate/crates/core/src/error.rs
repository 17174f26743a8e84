use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("cannot parse scalar {text:?}: {reason}")]
    ScalarParse { text: String, reason: String },
    #[error("scalars from different fields were combined")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("commutativity conflict: {left}*{right} and {right}*{left} given with different values")]
    CommutativityConflict { left: String, right: String },
    #[error("(β,γ) ≠ (0,0) required")]
    ZeroParameters,
    #[error("principal powers start at exponent 1")]
    ZeroExponent,
    #[error("identity is not homogeneous in variable {0}")]
    NotHomogeneous(String),
    #[error("unsupported degree {degree} in variable {variable} (at most 3)")]
    UnsupportedDegree { variable: String, degree: usize },
    #[error("NotIdempotent: the given element is not a nonzero idempotent")]
    NotIdempotent,
    #[error("IdentityFails: the algebra does not satisfy the identity for (β,γ) = ({beta},{gamma})")]
    IdentityFails { beta: String, gamma: String },
    #[error("MinimalPolynomialViolation: minimal polynomial {minimal} does not divide {expected}")]
    MinimalPolynomialViolation { minimal: String, expected: String },
    #[error("NotDirectSum: components do not form a direct sum of the whole space")]
    NotDirectSum,
    #[error("BaseAlgebraNotGaj: the base algebra does not satisfy the identity for these parameters")]
    BaseAlgebraNotGaj,
    #[error("ModuleNotM1: the module is not equal to its component M_1")]
    ModuleNotM1,
    #[error("HypothesisNotMet: {}", .0.join(", "))]
    HypothesisNotMet(Vec<String>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("ClassificationFailed: no admissible component equals M ({0})")]
    ClassificationFailed(String),
    #[error("invalid document at {path}: {reason}")]
    Document { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-readable name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::ScalarParse { .. } => "ScalarParse",
            Error::FieldMismatch => "FieldMismatch",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::CommutativityConflict { .. } => "CommutativityConflict",
            Error::ZeroParameters => "ZeroParameters",
            Error::ZeroExponent => "ZeroExponent",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::UnsupportedDegree { .. } => "UnsupportedDegree",
            Error::NotIdempotent => "NotIdempotent",
            Error::IdentityFails { .. } => "IdentityFails",
            Error::MinimalPolynomialViolation { .. } => "MinimalPolynomialViolation",
            Error::NotDirectSum => "NotDirectSum",
            Error::BaseAlgebraNotGaj => "BaseAlgebraNotGaj",
            Error::ModuleNotM1 => "ModuleNotM1",
            Error::HypothesisNotMet(_) => "HypothesisNotMet",
            Error::Precondition(_) => "Precondition",
            Error::ClassificationFailed(_) => "ClassificationFailed",
            Error::Document { .. } => "Document",
        }
    }
}
