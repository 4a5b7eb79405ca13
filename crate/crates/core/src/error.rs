use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable mismatch: {left} vs {right}")]
    VarMismatch { left: &'static str, right: &'static str },
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("series coefficient {index} is not exact in the coefficient ring")]
    InexactDivision { index: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("need at least {needed} terms, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("truncation {given} too small, need {needed}")]
    TruncationTooSmall { needed: usize, given: usize },
    #[error("leading Hankel minor is singular")]
    SingularMinor,
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
    #[error("symbolic F_(-1) is undefined; only s = 1 or s = -1 is supported")]
    SymbolicFibMinusOne,
}
