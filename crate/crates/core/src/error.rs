use thiserror::Error;

/// Errors raised by the engine.
///
/// Precondition failures carry the name of the violated constraint so the
/// CLI can surface them verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p and q must be coprime (got p = {p}, q = {q})")]
    NotCoprime { p: i64, q: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("pole of order {order} exceeds the configured bound {bound}")]
    PoleTooLarge { order: usize, bound: usize },

    #[error("pole at t = 0 prevents expansion as a power series in t")]
    PoleAtZero,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("series contains a disconnected graph")]
    Disconnected,

    #[error("series has no unit term (coefficient of the empty graph must be 1)")]
    MissingUnit,

    #[error("color sets {0:?} and {1:?} overlap")]
    OverlappingColors(String, String),

    #[error("recursion did not stabilize within {0} iterations")]
    NoStabilization(usize),

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("decoration is mis-normalized: pole of order {0} survives the polar correction")]
    MisNormalized(i64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
