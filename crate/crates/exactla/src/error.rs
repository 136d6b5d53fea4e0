use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("GF({p}^{degree}) is outside the supported range")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operands live over different fields ({0} vs {1})")]
    MixedFields(String, String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}
