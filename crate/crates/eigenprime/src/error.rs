use thiserror::Error;

/// Error type shared by every counting module.
///
/// `Capacity` means an input exceeded what the current tables or integer
/// widths can serve exactly; `Domain` means the input violates a
/// mathematical precondition (e.g. a residue not coprime to the modulus).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity: {0}")]
    Capacity(String),
    #[error("domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn capacity(msg: impl Into<String>) -> Error {
    Error::Capacity(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
