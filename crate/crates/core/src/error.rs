use exactla::LinalgError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit laws fail for basis element {0}")]
    NotUnital(usize),
    #[error("idempotent {0} does not square to itself")]
    NotIdempotent(usize),
    #[error("idempotents {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
    #[error("idempotents do not sum to the unit")]
    IncompleteIdempotents,
    #[error("idempotent {0} is not primitive: its corner ring is not local")]
    NotPrimitive(usize),
    #[error("cannot decide whether the corner ring of idempotent {0} is local")]
    PrimitivityUndecided(usize),
    #[error("basis element {0} does not lie in its declared Peirce block")]
    StraddlesBlocks(usize),
    #[error("supplied radical is invalid: {0}")]
    BadRadical(String),
    #[error("algebra has no Peirce data")]
    MissingPeirce,
    #[error("algebra is not basic")]
    NotBasic,
    #[error("algebra is not self-injective")]
    NotSelfInjective,
    #[error("no Frobenius form could be found")]
    NoFrobeniusForm,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("operands live over different algebras or fields")]
    Mismatch,
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("search bound exceeded: {0}")]
    BoundOverflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
