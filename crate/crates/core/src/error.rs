use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("duplicate mode label `{0}`")]
    DuplicateModeLabel(String),
    #[error("unknown mode label `{0}`")]
    UnknownMode(String),
    #[error("occupation list has length {got}, register has {expected} modes")]
    OccupationLength { expected: usize, got: usize },
    #[error("basis index {index} out of range for a {modes}-mode register")]
    IndexOutOfRange { index: usize, modes: usize },
    #[error("string order must be a permutation of 0..{0}")]
    InvalidStringOrder(usize),
    #[error("amplitude vector has length {got}, expected {expected}")]
    AmplitudeLength { expected: usize, got: usize },
    #[error("operands live on different mode registers")]
    RegisterMismatch,
    #[error("operator requires the canonical Rindler register")]
    WrongRegister,
    #[error("matrix dimension {got} does not match register dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{what} = {value} is outside its allowed range")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("|q_R|^2 + |q_L|^2 = {norm} violates the unit-normalization invariant")]
    UnnormalizedWeights { norm: f64 },
    #[error("matrix is not Hermitian (max |a_ij - conj(a_ji)| = {defect:e})")]
    NotHermitian { defect: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
