use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent of an ordinary power must be positive, got {0}")]
    NonPositivePower(i64),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("the prime of an empty vertex set has no positive power here")]
    EmptyPrime,

    #[error("ideal construction exceeded the cap of {cap} generators")]
    GeneratorCap { cap: usize },

    #[error("S/I is zero for the unit ideal")]
    UnitIdeal,

    #[error("Taylor complex limited to {max} generators, ideal has {found}")]
    TaylorTooLarge { found: usize, max: usize },

    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u32),

    #[error("variable x{} occurs twice in the certificate", .0 + 1)]
    RepeatedCertificateVariable(usize),

    #[error("not a star packing: closed neighborhoods of {0} and {1} intersect")]
    InvalidStarPacking(usize, usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("parse error: {0}")]
    Parse(String),
}
