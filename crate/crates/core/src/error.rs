use alloc::string::String;

use thiserror::Error;

/// Errors raised by braid constructors and moves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count must be at least 1")]
    ZeroStrands,
    #[error("strand count {0} exceeds the supported maximum of {max}", max = crate::MAX_STRANDS)]
    TooManyStrands(usize),
    #[error("malformed letter token `{0}`")]
    MalformedToken(String),
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {generator} is out of range for {strands} strands")]
    GeneratorOutOfRange { generator: i32, strands: usize },
    #[error("word is not destabilizable: {0}")]
    NotDestabilizable(&'static str),
    #[error("word is not in exchange form")]
    NotExchangeForm,
    #[error("rewrite target does not represent the conjugated braid")]
    RewriteMismatch,
    #[error("factorization does not represent the given braid")]
    FactorizationMismatch,
    #[error("the zero polynomial has no v-breadth")]
    ZeroPolynomial,
    #[error("computation budget exceeded")]
    BudgetExceeded,
    #[error("invalid permutation")]
    InvalidPermutation,
    #[error("{0}")]
    Invalid(&'static str),
}
