use thiserror::Error;

/// Errors raised by quiver, algebra and form computations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Loops, 2-cycles or (where forbidden) multiple arrows.
    #[error("quiver violates the cluster-quiver conditions: {}", .0.join("; "))]
    NotClusterQuiver(Vec<String>),

    #[error("quiver is not cyclically oriented; non-oriented chordless cycle through {}", .witness.join(", "))]
    NotCyclicallyOriented { witness: Vec<String> },

    #[error("arrow `{0}` does not lie on an oriented chordless cycle")]
    NotOnOrientedCycle(String),

    #[error("quiver is not connected")]
    Disconnected,

    #[error("quiver has an oriented cycle; a triangular algebra is required")]
    NotTriangular,

    #[error("size bound exceeded: {what} is {actual}, limit {limit}")]
    SizeBound {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid admissible cut: {0}")]
    InvalidCut(String),

    #[error("possibly infinite-dimensional: paths of length {cutoff} survive the cutoff")]
    PossiblyInfinite { cutoff: usize },

    #[error("relations violate (R1)/(R2): {}", .0.join("; "))]
    RelationShape(Vec<String>),

    #[error("relation {index} is not minimal: {reason}")]
    NonMinimalRelation { index: usize, reason: String },

    #[error("singular Cartan matrix; infinite global dimension suspected")]
    SingularCartan,

    #[error("form is not positive definite")]
    NotPositiveDefinite,

    #[error("form is not a unit form (diagonal entry {0} of the quadratic form)")]
    NotUnitForm(String),

    #[error("Coxeter polynomial has non-integral coefficient {0}")]
    NonIntegral(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Vertex or arrow ids that explain the failure, when there are any.
    pub fn witness(&self) -> Option<Vec<String>> {
        match self {
            Error::NotCyclicallyOriented { witness } => Some(witness.clone()),
            Error::NotClusterQuiver(v) | Error::RelationShape(v) => Some(v.clone()),
            Error::NotOnOrientedCycle(a) | Error::UnknownArrow(a) => Some(vec![a.clone()]),
            Error::UnknownVertex(v) => Some(vec![v.clone()]),
            _ => None,
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "malformed",
            Error::UnknownVertex(_) => "unknown-vertex",
            Error::UnknownArrow(_) => "unknown-arrow",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::NotClusterQuiver(_) => "not-cluster-quiver",
            Error::NotCyclicallyOriented { .. } => "not-cyclically-oriented",
            Error::NotOnOrientedCycle(_) => "not-on-oriented-cycle",
            Error::Disconnected => "disconnected",
            Error::NotTriangular => "not-triangular",
            Error::SizeBound { .. } => "size-bound",
            Error::InvalidCut(_) => "invalid-cut",
            Error::PossiblyInfinite { .. } => "possibly-infinite",
            Error::RelationShape(_) => "relation-shape",
            Error::NonMinimalRelation { .. } => "non-minimal-relation",
            Error::SingularCartan => "singular-cartan",
            Error::NotPositiveDefinite => "not-positive-definite",
            Error::NotUnitForm(_) => "not-unit-form",
            Error::NonIntegral(_) => "non-integral",
            Error::Invariant(_) => "invariant",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
