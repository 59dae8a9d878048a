use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring needs at least one variable")]
    EmptyRing,
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("weight of variable {index} must be positive, got {weight}")]
    NonPositiveWeight { index: usize, weight: i64 },
    #[error("length mismatch: {what} has {got} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("polynomial is not weighted-homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("ideal has no cached Groebner basis")]
    MissingBasis,
    #[error("budget exceeded: {what} > {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("weighted projective space P({0}) is not well-formed")]
    NotWellFormed(String),
    #[error(
        "generators do not form a regular sequence (expected codimension {expected}, got {got})"
    )]
    NotCompleteIntersection { expected: i64, got: i64 },
    #[error("degree bound {bound} is below the largest generator degree {needed}")]
    DegreeBoundTooSmall { bound: i64, needed: i64 },
    #[error(
        "component of bidegree ({q}, {t}) needs a {rows}x{cols} matrix, over the limit {limit}"
    )]
    ComponentTooLarge {
        q: i64,
        t: i64,
        rows: usize,
        cols: usize,
        limit: usize,
    },
    #[error("torelli test needs S < 0 (general type), got S = {0}")]
    NotGeneralType(i64),
    #[error("hypothesis a_{i} + a_{j} > a_0 fails for pair ({i}, {j})")]
    PluckerHypothesis { i: usize, j: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
