use thiserror::Error;

/// Errors raised by constructors and analyses in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid q parameter {0}: must be a rational different from 0, 1 and -1")]
    InvalidQ(String),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("q-binomial [{ell} choose {r}] is undefined for r > ell")]
    BinomialRange { ell: u32, r: u32 },
    #[error("series has a degree-0 term")]
    ConstantTerm,
    #[error("spectral parameter must be nonzero")]
    ZeroRoot,
    #[error("operation needs a nontrivial Drinfeld polynomial")]
    TrivialPolynomial,
    #[error("modules were built over different q ({0} vs {1})")]
    QMismatch(String, String),
    #[error("malformed module: {0}")]
    Malformed(String),
    #[error("Drinfeld relation failed: {0}")]
    DrinfeldRelation(String),
    #[error("window too small: {0}")]
    Window(String),
    #[error("not a triangular self-extension: {0}")]
    ExtensionShape(String),
    #[error("degree mismatch: polynomial has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("quotient has codimension {0}, expected 2")]
    Codimension(usize),
    #[error("no ordering of fundamental factors is cyclic on the top vector (tried {tried} orderings)")]
    NotCyclic { tried: usize },
    #[error("input module is not simple: {0}")]
    NotSimple(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
