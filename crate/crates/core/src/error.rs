use thiserror::Error;

use crate::env::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    #[error("non-physical environment: {0}")]
    NonPhysical(Violation),

    #[error(
        "quadrature failed on [{lower}, {upper}]: error estimate {error_estimate:.3e} \
         after {panels} panels"
    )]
    Quadrature { lower: f64, upper: f64, error_estimate: f64, panels: usize },

    #[error("root finder failed: {0}")]
    Solver(String),

    #[error("interrogation time {t} exceeds the total time budget {budget}")]
    Budget { t: f64, budget: f64 },

    #[error("Fisher information is singular: p(1 - p) = 0 at p = {p}")]
    Singular { p: f64 },

    #[error("sweep failed at N = {n}: {source}")]
    Sweep { n: u64, source: Box<Error> },
}

impl Error {
    /// Short machine-readable category, used by front ends for exit codes.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Domain(_) | Error::NonPhysical(_) | Error::Budget { .. } => "domain",
            Error::Quadrature { .. } | Error::Solver(_) | Error::Singular { .. } => "numerical",
            Error::Sweep { source, .. } => source.category(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
