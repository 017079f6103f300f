use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid JSON polynomial: {0}")]
    Json(String),
    #[error("variable sets differ")]
    VarSetMismatch,
    #[error("matrix size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("variable {0} is zero but appears with a negative exponent")]
    ZeroAtPole(String),
    #[error("missing value for variable {0}")]
    MissingVariable(String),
    #[error("q-Pochhammer denominator vanishes identically")]
    VanishingDenominator,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: u64 },
    #[error("exact division failed during elimination")]
    InexactDivision,
    #[error("dent sequence needs at least {need} entries, got {got}")]
    SequenceTooShort { need: usize, got: usize },
    #[error("zero denominator determinant")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
