use thiserror::Error;

/// Errors raised by the arithmetic, valuation and adelic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime in the base ring")]
    NotPrime(String),
    #[error("the zero ideal has no factorization")]
    ZeroIdeal,
    #[error("zero has no multiplicative inverse")]
    ZeroElement,
    #[error("place does not belong to this field: {0}")]
    PlaceMismatch(String),
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("operation requires a nonarchimedean place")]
    ArchimedeanPlace,
    #[error("operation only defined for {0}")]
    WrongFamily(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unsupported field for this operation: {0}")]
    UnsupportedField(String),
    #[error("local element is not invertible")]
    NotInvertible,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("adele is not a unit")]
    NotAUnit,
    #[error("archimedean coordinates do not match the field's embeddings")]
    ShapeMismatch,
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("integer too large to factor: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// The variant name, for machine-readable diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::ZeroIdeal => "ZeroIdeal",
            Error::ZeroElement => "ZeroElement",
            Error::PlaceMismatch(_) => "PlaceMismatch",
            Error::SpecMismatch => "SpecMismatch",
            Error::ArchimedeanPlace => "ArchimedeanPlace",
            Error::WrongFamily(_) => "WrongFamily",
            Error::Unsupported(_) => "Unsupported",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::NotInvertible => "NotInvertible",
            Error::InsufficientPrecision(_) => "InsufficientPrecision",
            Error::NotAUnit => "NotAUnit",
            Error::ShapeMismatch => "ShapeMismatch",
            Error::InvalidField(_) => "InvalidField",
            Error::TooLarge(_) => "TooLarge",
            Error::Parse(_) => "Parse",
        }
    }
}
