use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A family or function parameter is outside its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The vertex count does not fit in the graph representation.
    #[error("graph too large: {0}")]
    Size(String),

    #[error("malformed graph6 input: byte {byte:#04x} at offset {offset}")]
    Malformed { offset: usize, byte: u8 },

    #[error("graph6 length error: {0}")]
    Length(String),

    #[error("graph6 padding bits must be zero (offset {offset})")]
    Padding { offset: usize },

    #[error("line {line}: {msg}")]
    Validation { line: usize, msg: String },

    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },

    /// A labelling or vertex index does not match the graph.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The exhaustive solver refuses graphs outside `1..=SOLVER_CAP`.
    #[error("solver capacity exceeded: {0}")]
    Capacity(String),

    #[error("structure error: {0}")]
    Structure(String),

    /// A construction failed its own postcondition. Always a bug.
    #[error("internal defect: {0}")]
    Defect(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
