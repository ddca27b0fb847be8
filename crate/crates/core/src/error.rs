use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size mismatch: diagram has {diagram} cells, cycle type has {cycle_type}")]
    SizeMismatch { diagram: usize, cycle_type: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("missing moment S{0}")]
    MissingMoment(usize),
    #[error("rank deficient system: rank {rank} < {unknowns} unknowns")]
    RankDeficient { rank: usize, unknowns: usize },
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// Whether the error signals a bug or failed self-check rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::VerificationFailure(_) | Error::InternalInconsistency(_) | Error::RankDeficient { .. }
        )
    }
}
