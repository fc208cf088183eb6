use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature violation: {0}")]
    SignatureViolation(String),

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("term {0} carries no derivation slot")]
    MissingDerivationSlot(String),

    #[error("polynomial power underflow: {0}")]
    DomainUnderflow(String),

    #[error("operation requires a nonzero element")]
    EmptyElement,

    #[error("window of {size} basis elements exceeds the limit of {limit}")]
    CapTooLarge { size: usize, limit: usize },

    #[error("out of window: {0}")]
    OutOfWindow(String),

    #[error("no multiplier within search bound {bound} produced an admissible result")]
    SearchExhausted { bound: u32 },

    #[error("tactic failed: {0}")]
    TacticFailed(String),

    #[error("trace does not reproduce its target: {0}")]
    TraceInvalid(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element is not divergence-free: divergence = {0}")]
    NotDivergenceFree(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn mismatch(left: impl ToString, right: impl ToString) -> Self {
        Error::SignatureMismatch {
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}
