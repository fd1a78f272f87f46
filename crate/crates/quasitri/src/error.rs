use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a face: {0}")]
    NotAFace(String),
    #[error("vertex sets overlap: {0}")]
    Overlap(String),
    #[error("vertex {0} already present")]
    VertexExists(String),
    #[error("bistellar move rejected: {0}")]
    Move(String),
    #[error("not a weak pseudomanifold")]
    NotPseudomanifold,
    #[error("not a closed weak pseudomanifold")]
    NotClosed,
    #[error("map is not injective on {0}")]
    NotInjective(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(isize, isize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("complex is disconnected")]
    Disconnected,
    #[error("not a loop: {0}")]
    NotALoop(String),
    #[error("basis does not generate: {0}")]
    BadBasis(String),
    #[error("not a solid torus over the seven-vertex torus: {0}")]
    NotSolidTorus(String),
    #[error("unknown catalog id {0}")]
    UnknownTorus(String),
    #[error("tori overlap beyond boundary: {0}")]
    ToriOverlap(String),
    #[error("apex link not a sphere: {0}")]
    ApexLink(String),
    #[error("no catalog torus kills this class ({0}, {1})")]
    NoCatalogTorus(i64, i64),
    #[error("unknown census key {key}; available: {available}")]
    UnknownKey { key: String, available: String },
    #[error("invalid characteristic data: {0}")]
    Characteristic(String),
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("not a closed 3-manifold: {0}")]
    NotManifold(String),
    #[error("too many vertices for this operation: {0}")]
    TooLarge(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
