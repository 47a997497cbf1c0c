use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator count {0} outside supported range 2..=16")]
    InvalidDimension(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },

    #[error("generator e{index} out of range for m = {m}")]
    GeneratorOutOfRange { index: usize, m: u8 },

    #[error("variable x{var} out of range for m = {m}")]
    VariableOutOfRange { var: usize, m: u8 },

    #[error("grade {k} out of range for m = {m}")]
    GradeOutOfRange { k: usize, m: u8 },

    #[error("expected a homogeneous {expected}")]
    NotHomogeneous { expected: String },

    #[error("coefficient polynomial depends on x{var}; steering coefficients must be functions of y = (x2..xm) only")]
    DependsOnZ { var: usize },

    #[error("precondition failed: {what}")]
    Precondition { what: String },

    #[error("rate must be nonzero")]
    ZeroRate,

    #[error("{rate} is not a root of multiplicity {multiplicity} of the characteristic polynomial")]
    NotARoot { rate: Rational, multiplicity: u32 },

    #[error("characteristic polynomial has no further rational roots; unfactored part: {remaining}")]
    Unfactored { remaining: String },

    #[error("input is not left monogenic; the hypercomplex derivative is only defined for monogenic functions")]
    NotMonogenic,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(what: impl Into<String>) -> Self {
        Error::Precondition { what: what.into() }
    }
}
