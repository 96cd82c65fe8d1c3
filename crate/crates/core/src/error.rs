use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series whose constant term is not a unit (|b0| = {0:e})")]
    DivisionByNonUnit(f64),

    #[error("series must have a zero constant term (got {0})")]
    NonzeroConstantTerm(Complex64),

    #[error("pole of F_alpha at z = {0}")]
    PoleAtZ(Complex64),

    #[error("alpha must lie in [0, 1), got {0}")]
    InvalidAlpha(f64),

    #[error("gamma must lie in [0, 1), got {0}")]
    InvalidGamma(f64),

    #[error("radius must lie in {expected}, got {value}")]
    InvalidRadius { value: f64, expected: &'static str },

    #[error("f vanishes at grid point z = {0}; zf'/f is undefined there")]
    ZeroOfFOnGrid(Complex64),

    #[error("|c| = 1 makes the disc endpoint x1 undefined")]
    DegenerateModulus,

    #[error("invalid g_n parameters: {0}")]
    InvalidGn(String),

    #[error("f(0) = {f0} differs from g(0) = {g0}")]
    BaseMismatch { f0: Complex64, g0: Complex64 },

    #[error("alpha = {0} exceeds 3 - 2*sqrt(2); the bound is not guaranteed there")]
    HypothesisOutOfRange(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid Schwarz generator: {0}")]
    InvalidGenerator(String),

    #[error("parse error: {0}")]
    Parse(String),
}
