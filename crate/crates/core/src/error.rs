use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative input to {0}")]
    NegativeInput(&'static str),
    #[error("non-positive input to {0}")]
    NonPositiveInput(&'static str),
    #[error("radicand mismatch: {left} vs {right}")]
    RadicandMismatch { left: String, right: String },
    #[error("not a cubic")]
    NotACubic,
    #[error("not a root")]
    NotARoot,
    #[error("repeated root: denesting formula degenerates")]
    RepeatedRoot,
    #[error("casus irreducibilis: use enumerate_branches")]
    CasusIrreducibilis,
    #[error("branch enumeration requires a negative discriminant")]
    NotCasusIrreducibilis,
    #[error("degenerate: denominator b - 2at vanishes at this precision")]
    Degenerate,
    #[error("denested pair does not satisfy the cube identities")]
    UnverifiedPair,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{var}' at position {pos} (equation uses '{expected}')")]
    UnknownVariable { var: char, expected: char, pos: usize },
    #[error("invalid rational '{0}'")]
    InvalidRational(String),
    #[error("digits must be in 1..=1000, got {0}")]
    DigitsOutOfRange(u32),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Whether the error stems from a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}
