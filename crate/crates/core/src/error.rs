use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Variant names double as the stable error names reported by the batch
/// runner, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor encountered: the modulus is reducible")]
    ZeroDivisor,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("automorphism list is not closed under composition: {0}")]
    NotClosed(String),
    #[error("group has order {group} but the modulus has degree {degree}")]
    WrongOrder { group: usize, degree: usize },
    #[error("fixed space of the full group has dimension {0} > 1")]
    FixedFieldTooBig(usize),
    #[error("bad subgroup: {0}")]
    BadSubgroup(String),

    #[error("unknown Lie type {0:?}")]
    UnknownType(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weights {0} and {1} lie in different classes of P/Q")]
    NotSameClass(String, String),
    #[error("link search exhausted after {0} steps")]
    SearchExhausted(usize),

    #[error("objects belong to different field contexts or Lie types")]
    ContextMismatch,
    #[error("invalid l-weight: {0}")]
    InvalidLWeight(String),
    #[error("unsupported Lie type {0} (only A1 is supported)")]
    UnsupportedType(String),
    #[error("descent inconsistency: {0}")]
    DescentInconsistency(String),

    #[error("primitive element search failed after {0} candidates")]
    PrimitiveSearchFailed(usize),
    #[error("internal consistency check failed: {0}")]
    CheckFailed(String),

    #[error("evaluation point is zero")]
    ZeroPoint,
    #[error("series constant term is not 1")]
    BadConstantTerm,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, e.g. `"NotDominant"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::Singular => "Singular",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::NotARoot(_) => "NotARoot",
            Error::NotClosed(_) => "NotClosed",
            Error::WrongOrder { .. } => "WrongOrder",
            Error::FixedFieldTooBig(_) => "FixedFieldTooBig",
            Error::BadSubgroup(_) => "BadSubgroup",
            Error::UnknownType(_) => "UnknownType",
            Error::NotDominant(_) => "NotDominant",
            Error::NotSameClass(..) => "NotSameClass",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::ContextMismatch => "ContextMismatch",
            Error::InvalidLWeight(_) => "InvalidLWeight",
            Error::UnsupportedType(_) => "UnsupportedType",
            Error::DescentInconsistency(_) => "DescentInconsistency",
            Error::PrimitiveSearchFailed(_) => "PrimitiveSearchFailed",
            Error::CheckFailed(_) => "CheckFailed",
            Error::ZeroPoint => "ZeroPoint",
            Error::BadConstantTerm => "BadConstantTerm",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
