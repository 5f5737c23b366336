use thiserror::Error;

/// Errors produced by the library.
///
/// The variants map onto the CLI exit codes: domain-style errors exit with 1,
/// budget overflows with 2 and internal-consistency failures with 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid swing: {0}")]
    InvalidSwing(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("not a shifted subfacet-degree function: {0}")]
    NotShiftedSubfacetFunction(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A claimed theorem failed on a concrete input. This should never
    /// happen; if it does it is either a bug or a counterexample.
    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget(_) => 2,
            Error::InternalConsistency(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
