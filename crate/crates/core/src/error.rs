use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("graph6 format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("lookup error: {0}")]
    Lookup(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("shape error: {0}")]
    Shape(String),
    /// A construction could not produce its object. For the constructions
    /// backed by a proof this signals a bug.
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("search budget exhausted after {nodes} nodes")]
    Inconclusive { nodes: u64 },
}

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: message.into(),
        }
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::Inconclusive { .. })
    }
}
