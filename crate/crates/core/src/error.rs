use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter index {index} out of range for alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown generator label {0:?}")]
    UnknownGenerator(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("malformed coefficient {0:?}")]
    MalformedCoefficient(String),

    #[error("operands live over different alphabets or fields")]
    Mismatch,

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("relation {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("relation {index} has degree {degree}, expected a quadratic relation")]
    NotQuadratic { index: usize, degree: usize },

    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },

    #[error("degree bound {0} is too small")]
    DegreeTooSmall(usize),

    #[error("truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("series constant term must be exactly 1")]
    NonUnitConstant,

    #[error("obstructions {0} and {1} are comparable under subword containment")]
    ComparableObstructions(String, String),

    #[error("rational coefficients are not supported by {0}")]
    RationalUnsupported(&'static str),

    #[error("invalid sigma family: {0}")]
    InvalidFamily(String),

    #[error("size bound exceeded: {what} is {actual}, limit {limit}")]
    SizeBound {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
