use thiserror::Error;

/// Errors produced while building graphs, ideals and Betti tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("edges ({0}, {1}) and ({1}, {0}) are anti-parallel")]
    AntiParallel(usize, usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("weight of vertex {0} must be a positive integer")]
    NonPositiveWeight(usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex {0} has weight 1 and cannot be weight-reduced")]
    TrivialWeight(usize),
    #[error("invalid family parameters: {0}")]
    Family(String),
    #[error("monomials of length {found} do not live in a ring with {expected} variables")]
    AmbientMismatch { expected: usize, found: usize },
    #[error(
        "{count} generators exceeds the cap of {cap}; the lcm lattice can reach {estimate} elements (override the cap to proceed)"
    )]
    GeneratorCap {
        count: usize,
        cap: usize,
        estimate: u128,
    },
    #[error("face {0:?} is not contained in the universe")]
    FaceOutsideUniverse(Vec<usize>),
    #[error("vertex label {0} is too large for a face bitset (max 63)")]
    LabelTooLarge(usize),
    #[error("Betti tables of the unit ideal are not supported")]
    UnitIdeal,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("generators of J and K do not partition the generators of I: {0}")]
    BadSplit(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("experiment bounds exceeded: {0}")]
    Bounds(String),
}

pub type Result<T> = std::result::Result<T, Error>;
