use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("complex has not been validated")]
    NotValidated,

    #[error("connectivity through codimension 1 requires a pure-dimensional complex")]
    NotPure,

    #[error("cells do not form a polyhedral complex; offending pairs: {0:?}")]
    InvalidComplex(Vec<(usize, usize)>),

    #[error("union repair did not converge after {0} rounds")]
    RepairFailed(usize),

    #[error("facet index {index} out of range for a complex with {count} facets")]
    FacetIndex { index: usize, count: usize },

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("intersection is not proper: {0} violating cell pairs")]
    ImproperIntersection(usize),

    #[error("complex is not connected through codimension 1")]
    NotConnectedThroughCodim1,

    #[error("sliced complex is not connected through codimension 1 after {0} attempts")]
    DisconnectedSlice(usize),

    #[error("depth budget exhausted at dimension {0}")]
    DepthExhausted(usize),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

impl Error {
    /// True for errors caused by bad caller input rather than internal failures.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Contract(_) | Error::RepairFailed(_) | Error::SearchExhausted(_) | Error::DepthExhausted(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
