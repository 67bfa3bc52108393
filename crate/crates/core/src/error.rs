use std::path::PathBuf;

use thiserror::Error;

use crate::spectrum::QuantumState;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested level lies at or above the critical coupling.
    #[error("no bound state {state}: coupling A = {coupling} does not exceed A_c = {critical}")]
    NotBound {
        state: QuantumState,
        coupling: f64,
        critical: f64,
    },

    #[error("invalid state label `{0}`")]
    InvalidLabel(String),

    #[error("numerical instability: {0}")]
    Numerical(String),

    #[error("unknown molecule `{0}`")]
    UnknownMolecule(String),

    #[error("configuration error in {path}: {message}", path = .path.display())]
    Config { path: PathBuf, message: String },

    #[error("alignment error: {0}")]
    Alignment(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
