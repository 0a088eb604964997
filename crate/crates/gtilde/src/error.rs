use thiserror::Error;

/// Errors shared by the polynomial layer, the Groebner engine and the
/// verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("exponent exceeds the supported bound")]
    ExponentOverflow,

    #[error("tower parameters differ: t = {left} vs t = {right}")]
    TowerMismatch { left: u32, right: u32 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("multinomial of an empty composition")]
    EmptyComposition,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("tower parameter t = {t} outside supported range 2..={cap}")]
    InvalidTower { t: u32, cap: u32 },

    #[error("generator index {index} outside 0..{bound}")]
    GeneratorIndex { index: u32, bound: u32 },

    #[error("basis set is empty")]
    EmptyBasis,

    #[error("input is not a Groebner basis: {witness}")]
    NotGroebner { witness: String },

    #[error("reduction budget of {budget} steps exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("{check} failed: {witness}")]
    Verification { check: String, witness: String },

    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("enumeration of {size} monomials exceeds the limit {limit}")]
    EnumerationTooLarge { size: u64, limit: u64 },
}

impl Error {
    pub(crate) fn verification(check: &str, witness: impl Into<String>) -> Self {
        Error::Verification {
            check: check.to_string(),
            witness: witness.into(),
        }
    }
}
