use alloc::string::String;

/// Errors raised by the geometry operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("non-finite entry at index {0}")]
    NonFinite(usize),
    #[error("the zero vector has no norming functional")]
    ZeroVector,
    #[error("point is not on the unit sphere (norm {norm})")]
    NotOnSphere { norm: f64 },
    #[error("functional is not on the dual unit sphere (dual norm {norm})")]
    NotOnDualSphere { norm: f64 },
    #[error("set is empty")]
    EmptySet,
    #[error("invalid norm family: {0}")]
    InvalidFamily(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unknown sequence generator `{0}`")]
    UnknownGenerator(String),
}

pub type Result<T> = core::result::Result<T, GeomError>;
