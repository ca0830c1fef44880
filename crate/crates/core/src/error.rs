use thiserror::Error;

/// Errors raised by the exact-geometry and algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a PL path needs at least two vertices")]
    TooFewVertices,
    #[error("zero-length segment between vertices {0} and {1}")]
    ZeroSegment(usize, usize),
    #[error("path is not closed: start and endpoint differ")]
    NotClosed,
    #[error("paths do not share start and endpoint")]
    EndpointMismatch,
    #[error("path endpoint is not an integer point")]
    NonIntegerEndpoint,
    #[error("the zero loop (0,0) is not allowed here")]
    ZeroLoop,
    #[error("loops are parallel (zero intersection determinant)")]
    ParallelLoops,
    #[error("a lattice polygon needs at least three vertices")]
    TooFewPolygonVertices,
    #[error("lattice polygon boundary self-intersects")]
    SelfIntersecting,
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(i64),
    #[error("point does not lie on the lift of the first loop")]
    PointNotOnLift,
    #[error("invalid rational: zero denominator")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
