use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),

    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("Groebner computation exceeded degree guard {guard} (reached degree {degree})")]
    GuardExceeded { guard: u32, degree: u32 },

    #[error("generator `{0}` has a constant or linear term; the ideal must lie in m^2")]
    NotInMSquared(String),

    #[error("the quotient is not local: multiplication by `{0}` is not nilpotent")]
    NotLocal(String),

    #[error("operation unsupported for Krull dimension {0}")]
    UnsupportedDimension(usize),

    #[error("ideal is not homogeneous for the standard grading")]
    NotStandardGraded,

    #[error("the algebra is zero-dimensional, so it has no regular element")]
    ZeroDimensional,

    #[error("the algebra has positive Krull dimension; this needs an artinian algebra")]
    NotArtinian,

    #[error("`{0}` is not a nonzero linear form")]
    NotLinearForm(String),

    #[error("the ideal contains a unit")]
    UnitIdeal,

    #[error("presentation shape mismatch: {0}")]
    Shape(String),

    #[error("free module of k-dimension {dim} exceeds the budget of {budget} at stage {stage}")]
    BudgetExceeded { stage: usize, dim: usize, budget: usize },

    #[error("syzygy index {index} exceeds resolved depth {depth}")]
    DepthExceeded { index: usize, depth: usize },

    #[error("independent computations disagree: {0}")]
    Mismatch(String),

    #[error("sequence has a zero entry at index {0}")]
    ZeroEntry(usize),

    #[error("{0} is not a regular element up to the checked degree")]
    NotRegular(String),

    #[error("module has finite projective dimension (beta_{0} = 0)")]
    FinitePd(usize),

    #[error("the two modules live over different algebras")]
    AlgebraMismatch,

    #[error("no linear regular element found after {0} attempts")]
    NoRegularElement(usize),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
