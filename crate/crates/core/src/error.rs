use thiserror::Error;

/// Everything that can go wrong while building data or evaluating formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible Cartan types: {0}")]
    IncompatibleTypes(String),
    #[error("unsupported lattice: {0}")]
    LatticeUnsupported(String),
    #[error("element lives on the {found} side but the {expected} side was required")]
    SideMismatch { expected: &'static str, found: &'static str },
    #[error("word {word:?} is not a reduced word for the requested element: {reason}")]
    WordNotReduced { word: Vec<usize>, reason: String },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("mixed variants require the Koornwinder datum (Q(B_n), Q(B_n))")]
    VariantRequiresKoornwinder,
    #[error("fractional exponent left after parameter substitution: {0}")]
    FractionalExponent(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("limit diverges: {0}")]
    DivergentLimit(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("relation fails: {0}")]
    RelationFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
