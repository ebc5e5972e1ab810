use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the semantics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration over {size} atoms exceeds the budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },

    #[error("program is not Horn: {reason}")]
    NotHorn { reason: String },

    #[error("{interp} is not a model of the program")]
    NotAModel { interp: String },

    #[error("clause {clause} contains the non-monotone atom {atom}")]
    NonMonotoneAtom { clause: usize, atom: String },

    #[error("clause {clause} has a head that is not definite: {atom}")]
    NotDefinite { clause: usize, atom: String },

    #[error("clause {clause} is a constraint clause")]
    HasConstraintClauses { clause: usize },

    #[error("negative weight {weight} for {atom}")]
    NegativeWeight { atom: String, weight: String },

    #[error("atom {0} is listed more than once")]
    DuplicateAtom(String),

    #[error("lower bound {lower} exceeds upper bound {upper}")]
    BoundInversion { lower: u64, upper: u64 },

    #[error("selection for clause {clause} is not a subset of its head")]
    SelectionNotSubsetOfHead { clause: usize },

    #[error("selection has {got} entries but the program has {expected} clauses")]
    SelectionArity { expected: usize, got: usize },

    #[error("clause {clause}: unsupported atom kind {kind}")]
    UnsupportedAtomKind { clause: usize, kind: String },

    #[error("clause {clause} contains a negated literal")]
    NegationPresent { clause: usize },

    #[error("fresh atom {0} clashes with an atom of the input")]
    NameClash(String),

    #[error("malformed constraint atom: {0}")]
    MalformedAtom(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A located error from the text frontend.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DuplicateAtom(String),
    NegativeWeight(String),
    BoundInversion { lower: u64, upper: u64 },
    Invalid(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::DuplicateAtom(a) => write!(f, "atom {a} is listed more than once"),
            ParseErrorKind::NegativeWeight(a) => write!(f, "negative weight for {a}"),
            ParseErrorKind::BoundInversion { lower, upper } => {
                write!(f, "lower bound {lower} exceeds upper bound {upper}")
            }
            ParseErrorKind::Invalid(msg) => f.write_str(msg),
        }
    }
}
