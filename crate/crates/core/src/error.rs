use thiserror::Error;

use crate::io::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation was called outside its contract.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Arguments are well formed but the quantity is undefined for them.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("graph is not Hamiltonian")]
    NotHamiltonian,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
