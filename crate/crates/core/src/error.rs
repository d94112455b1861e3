use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex label {label} out of range 1..={n}")]
    VertexOutOfRange { label: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("missing header line `n <count>`")]
    MissingHeader,

    #[error("edge {0}-{1} is not an edge of the graph")]
    EdgeNotInGraph(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("graph is disconnected; Perron positivity does not apply")]
    Disconnected,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoConvergence { .. } => 3,
            Error::SizeGuard(_) => 4,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
