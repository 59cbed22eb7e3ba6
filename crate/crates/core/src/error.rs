use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("prime {p} divides a stored denominator")]
    BadPrime { p: u64 },

    #[error("rank {rank} is out of range for sym_dim({n}, {k}) = {dim}")]
    RankOutOfRange { rank: usize, n: usize, k: usize, dim: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("{unknowns} unknowns exceed the configured cap of {cap}")]
    TooManyUnknowns { unknowns: usize, cap: usize },

    #[error("invalid parameters for {name}: {reason}")]
    InvalidParameters { name: String, reason: String },

    #[error("point is off the cone: quadric {index} evaluates to {value}")]
    OffCone { index: usize, value: String },

    #[error("sampler failure: {0}")]
    Sampler(String),

    #[error("covector vanishes on the whole cone")]
    DegenerateSection,

    #[error("A(a, a) is not parallel to a at sample {index}")]
    NotParallel { index: usize },

    #[error("no line sampler is available for {0}")]
    NoLineSampler(String),

    #[error("schema violation at {path}: {reason}")]
    Schema { path: String, reason: String },

    #[error("unknown case id `{0}`")]
    UnknownCase(String),

    #[error("unknown variety or algebra `{0}`")]
    UnknownName(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
