use thiserror::Error;

use crate::model::validate::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { vertex: String, edge: String },

    #[error("t-edge {0} carries no nominal index")]
    TEdgeHasNoIndex(String),

    #[error("graph is not well-formed: {0}")]
    NotWellFormed(ValidationReport),

    #[error("graph is not admissible: {0}")]
    NotAdmissible(ValidationReport),

    #[error("vertex {vertex} has no corner with low index {low_index}")]
    InvalidCorner { vertex: String, low_index: u32 },

    #[error("no such edge: {0}")]
    NoSuchEdge(String),

    #[error("no such vertex: {0}")]
    NoSuchVertex(String),

    #[error("duplicate id: {0}")]
    DuplicateId(String),

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("simple graph is not the image of a reduction: {0}")]
    NotInImage(String),

    #[error("chi={chi} is inconsistent with orientable={orientable}")]
    InconsistentPair { chi: i64, orientable: bool },

    #[error("exhaustive search budget exceeded: {0}")]
    TooLarge(String),

    #[error("no admissible graph after {0} attempts")]
    GenerationBudgetExceeded(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
