use thiserror::Error;

use crate::complex::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: expected d >= 1")]
    InvalidDimension(usize),

    #[error("{0:?} is not a face of the complex")]
    InvalidFace(Vec<VertexId>),

    #[error("{{{0}, {1}}} is not an edge of the complex")]
    NotAnEdge(VertexId, VertexId),

    #[error("vertex {0} is already present")]
    VertexExists(VertexId),

    #[error("vertex {0} is not present")]
    UnknownVertex(VertexId),

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("vertex {0} occurs in both factors of the join")]
    OverlappingVertices(VertexId),

    #[error("found a clique with {clique} vertices, but d = {d}")]
    DimensionMismatch { clique: usize, d: usize },

    #[error("polynomial of degree {degree} exceeds d = {d}")]
    DegreeTooLarge { degree: usize, d: usize },

    #[error("h-vector {h:?} is not symmetric for d = {d} (Dehn-Sommerville relations fail)")]
    NotSymmetric { h: Vec<i64>, d: usize },

    #[error("non-zero residue {residue:?} after gamma elimination")]
    NonZeroResidue { residue: Vec<i64> },

    #[error("vertex map is not a bijection: {0}")]
    NotBijective(String),

    #[error("face classification needs at least one subdivision step")]
    NoSteps,

    #[error("cannot take {k} subdivision steps: the complex has no edges")]
    NoEdges { k: usize },

    #[error("step {index}: {error}")]
    Step { index: usize, error: Box<Error> },

    #[error("invalid building set: {0}")]
    InvalidBuildingSet(String),

    #[error("not a flag building set: {0} has no split into two disjoint elements")]
    NotFlagBuildingSet(String),

    #[error("building set is not connected: the ground set is missing")]
    NotConnected,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("no flag ordering found")]
    NoFlagOrdering,

    #[error("invalid flag ordering at element {index}: {reason}")]
    InvalidOrdering { index: usize, reason: String },

    #[error("nested-set complex is not flag")]
    NestedSetsNotFlag,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn at_step(self, index: usize) -> Error {
        Error::Step {
            index,
            error: Box::new(self),
        }
    }
}
