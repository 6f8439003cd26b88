use thiserror::Error;

use crate::words::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("invalid symbol name `{0}`")]
    InvalidSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("letter {letter} is outside an alphabet of {size} symbols")]
    LetterOutOfRange { letter: Letter, size: usize },
    #[error("malformed word `{0}`")]
    Malformed(String),
    #[error("invalid monomial order: {0}")]
    BadOrder(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("rule {lhs} -> {rhs} is not oriented: left side must be greater")]
    Misoriented { lhs: String, rhs: String },
    #[error("empty word not allowed as a rule side in semigroup mode")]
    EmptySide,
    #[error("reduction did not terminate within {0} steps")]
    StepBudget(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("scalars from different fields")]
    FieldMismatch,
    #[error("unknown field `{0}`, expected Q or F<p>")]
    BadField(String),
    #[error("invalid coefficient `{0}`")]
    BadScalar(String),
    #[error("empty monomial not allowed in semigroup mode")]
    EmptyMonomial,
    #[error("reduction did not terminate within {0} steps")]
    StepBudget(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("basis element `{0}` is not a monic binomial l - r")]
    NonBinomial(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
