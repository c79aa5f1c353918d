use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An interval was too wide to certify the requested answer.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// Arithmetic between quadratic irrationals over different square roots.
    #[error("incompatible surds: sqrt {0} and sqrt {1}")]
    IncompatibleSurds(u64, u64),

    #[error("density out of range: {0}")]
    DensityOutOfRange(String),

    #[error("density must be rational")]
    NotRationalDensity,

    #[error("density must be irrational")]
    RequiresIrrational,

    #[error("decimal intervals are not supported here")]
    IntervalNotSupported,

    #[error("not enough partial quotients: need index {needed}, expansion has {available}")]
    InsufficientQuotients { needed: usize, available: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn precision(what: impl Into<String>) -> Self {
        Error::PrecisionExhausted(what.into())
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
