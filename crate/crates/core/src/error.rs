use thiserror::Error;

use crate::rootsys::DiagramType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {ty:?}")]
    InvalidRank { ty: DiagramType, rank: usize },
    #[error("no vertices selected")]
    EmptySelection,
    #[error("vertex {0} does not exist in this diagram")]
    UnknownVertex(usize),
    #[error("vertex {0} is not shaded")]
    NotShaded(usize),
    #[error("wall-crossing walk did not close up within {0} crossings")]
    PeriodBoundExceeded(usize),
    #[error("wall-crossing walk is not periodic in label-1 walls: {0}")]
    InconsistentPeriod(String),
    #[error("window is empty")]
    EmptyWindow,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("length {0} is outside 1..=6")]
    LengthOutOfRange(i64),
    #[error("no ADE diagram in the catalogue has a vertex labelled {0}")]
    NoVertexWithLabel(i64),
    #[error("duality is not specified for {0}")]
    UnsupportedDual(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("a presentation needs at least one equator puncture (got N = {0})")]
    InvalidPunctureCount(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
