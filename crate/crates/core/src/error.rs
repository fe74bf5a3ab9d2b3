use thiserror::Error;

/// A structural hypothesis of a construction that the given inputs violate.
///
/// These are reported separately from plain input errors so that drivers can
/// tell "bad arguments" apart from "this instance is not admissible".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Hypothesis {
    #[error("points must be distinct elements (repeated point {0})")]
    DistinctElements(u32),
    #[error("multipliers must be nonzero (position {0})")]
    NonzeroMultiplier(usize),
    #[error("evaluation points are not P-independent")]
    PIndependent,
    #[error("inverted evaluation points are not P-independent")]
    InversePIndependent,
    #[error("coprimality fails: factor {factor} vanishes at point {point}")]
    Coprime { factor: usize, point: u32 },
    #[error("polynomial is not invariant")]
    Invariant,
    #[error("polynomial must be nonconstant")]
    Nonconstant,
    #[error("skew Vandermonde rank {rank} is below the required {required}")]
    VandermondeRank { rank: usize, required: usize },
    #[error("dimension {k} exceeds length {n}")]
    DimensionTooLarge { k: usize, n: usize },
    #[error("factor {0} must be commutative (identity twist)")]
    Commutative(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("degrees must be positive (s={s}, t={t}, r={r})")]
    ZeroDegree { s: u32, t: u32, r: u32 },
    #[error("intermediate degree {r} does not divide extension degree {t}")]
    NotDivisor { r: u32, t: u32 },
    #[error("field of order {p}^{degree} exceeds the supported size 2^20")]
    FieldTooLarge { p: u32, degree: u32 },
    #[error("invalid modulus: {0}")]
    Modulus(String),
    #[error("element {value} is not in a field of order {order}")]
    ElementOutOfRange { value: u32, order: u32 },
    #[error("operands belong to different fields or rings")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} must be nonzero")]
    MustBeNonzero(&'static str),
    #[error("empty input")]
    Empty,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix of {rows}x{cols} exceeds the 4096x4096 guard")]
    MatrixTooLarge { rows: usize, cols: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(#[from] Hypothesis),
}

pub type Result<T> = std::result::Result<T, Error>;
