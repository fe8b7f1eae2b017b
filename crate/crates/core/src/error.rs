use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix order exceeds cap {cap} (infinite order or not invertible)")]
    OrderExceedsCap { cap: u64 },

    #[error("Cartan matrix is not of finite type: {0}")]
    InvalidCartan(String),

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("invalid index {index} (must be below {bound})")]
    InvalidIndex { index: usize, bound: usize },

    #[error("matrix set is not closed under multiplication")]
    NotClosed,

    #[error("Molien series does not match a product of 1/(1-t^d): {0}")]
    NotReflectionGroup(String),

    #[error("result is not a polynomial: {0}")]
    NotPolynomial(String),

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("negative coefficient: {0}")]
    NegativeCoefficient(String),

    #[error("restriction map is not surjective onto a saturated sublattice (elementary divisors {divisors}); saturate the kernel")]
    NonSurjective { divisors: String },

    #[error("Frobenius twist does not permute the roots")]
    NotRootPermuting,

    #[error("Frobenius twist does not normalize the component group")]
    GammaNotNormalized,

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable tag, used in emitted error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "zero_denominator",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::NonSquare { .. } => "non_square",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::OrderExceedsCap { .. } => "order_exceeds_cap",
            Error::InvalidCartan(_) => "invalid_cartan",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidIndex { .. } => "invalid_index",
            Error::NotClosed => "not_closed",
            Error::NotReflectionGroup(_) => "not_reflection_group",
            Error::NotPolynomial(_) => "not_polynomial",
            Error::NonIntegral(_) => "non_integral",
            Error::NegativeCoefficient(_) => "negative_coefficient",
            Error::NonSurjective { .. } => "non_surjective",
            Error::NotRootPermuting => "not_root_permuting",
            Error::GammaNotNormalized => "gamma_not_normalized",
            Error::Inconsistent(_) => "inconsistent",
            Error::InvalidInput(_) => "invalid_input",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
