use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is frozen and cannot be mutated")]
    FrozenMutation(usize),
    #[error("vertex index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("expected a point of flavor {expected:?}, got {got:?}")]
    FlavorMismatch { expected: crate::seed::Flavor, got: crate::seed::Flavor },
    #[error("permutation is invalid: {0}")]
    BadPermutation(String),
    #[error("matrix entry overflow during mutation")]
    Overflow,
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("edge {0} is a boundary edge and cannot be flipped")]
    BoundaryEdge(usize),
    #[error("the two triangles adjacent to edge {0} coincide")]
    SelfGluedQuadrilateral(usize),
    #[error("no vertex for the requested role: {0}")]
    RoleNotFound(String),
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("no suitable chart at marked point {0}")]
    MissingChart(usize),
    #[error("invalid fundamental-weight tag {0:?}: need a proper nonempty subset of {{1,2,3}}")]
    InvalidTag(Vec<usize>),
    #[error("invalid end kind: {0}")]
    InvalidKind(String),
    #[error("fixture data error: {0}")]
    BadFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
