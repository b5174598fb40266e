use thiserror::Error;

pub type Result<T> = std::result::Result<T, GeometryError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("vector has non-finite components")]
    NonFinite,

    #[error("vector norm {0:e} is too small to define a direction")]
    ZeroVector(f64),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not self-adjoint (residual {0:e})")]
    NotSelfAdjoint(f64),

    #[error("matrix is not idempotent (residual {0:e})")]
    NotIdempotent(f64),

    #[error("frame columns are linearly dependent")]
    RankDeficientFrame,

    #[error("operation requires a non-empty projective subspace")]
    EmptySubspace,

    #[error("conditioning event has probability {0:e}; conditional is undefined")]
    UndefinedConditional(f64),

    #[error("start representative does not project to the geodesic start point")]
    StartNotOnGeodesic,

    #[error("single-event and Born probabilities disagree ({single} vs {born})")]
    BridgeMismatch { single: f64, born: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl GeometryError {
    pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(GeometryError::DimensionMismatch { expected, found })
        }
    }

    /// True for errors caused by a malformed operator rather than bad shapes.
    pub fn is_invalid_event(&self) -> bool {
        matches!(
            self,
            GeometryError::NonSquare { .. }
                | GeometryError::NotSelfAdjoint(_)
                | GeometryError::NotIdempotent(_)
                | GeometryError::RankDeficientFrame
        )
    }
}
