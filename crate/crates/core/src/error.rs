use crate::numerics::NumericsError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WhaError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("no antipode satisfies the antipode axioms")]
    NoAntipode,
    #[error("antipode axioms have a {0}-dimensional solution space")]
    AntipodeNotUnique(usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("dimension {dim} exceeds cap {cap}")]
    DimCapExceeded { dim: usize, cap: usize },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("axiom violated: {0}")]
    AxiomViolation(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("integral is degenerate")]
    DegenerateIntegral,
    #[error("algebra is not connected")]
    NotConnected,
    #[error("algebra is not biconnected")]
    NotBiconnected,
    #[error("equivalence violated: {0}")]
    EquivalenceViolated(String),
    #[error("equation violated: {0}")]
    EquationViolated(String),
    #[error("algebra is not pseudo-unitary")]
    NotPseudoUnitary,
    #[error("element is not pivotal")]
    NotPivotal,
    #[error("pivotal element has irrational coordinates")]
    NonRationalPivotal,
    #[error("comodule algebra is decomposable")]
    Decomposable,
    #[error("module algebra is not semisimple")]
    NotSemisimpleM,
    #[error("internal error: {0}")]
    Internal(String),
}

impl WhaError {
    /// Process exit code: 1 verification failure, 2 input error, 3 equivalence violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            WhaError::EquivalenceViolated(_) => 3,
            WhaError::Parse { .. }
            | WhaError::Io(_)
            | WhaError::InvalidParams(_)
            | WhaError::InvalidGroupoid(_)
            | WhaError::DimCapExceeded { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = WhaError> = std::result::Result<T, E>;
