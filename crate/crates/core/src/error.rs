use thiserror::Error;

/// Errors raised by series arithmetic, q-objects and the identity catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading coefficient at the valuation bound is zero")]
    ZeroLeadingCoefficient,
    #[error("empty precision window (val {val} > prec {prec})")]
    EmptyWindow { val: i64, prec: i64 },
    #[error("1/(1 - c) with c = 1 is a pole")]
    PoleAtConstant,
    #[error("formal sum did not settle after {iterations} terms")]
    DivergentFormalSum { iterations: i64 },
    #[error("exponent {exponent} lies beyond precision {prec}")]
    OutOfWindow { exponent: i64, prec: i64 },
    #[error("zero denominator {factor} at k = {k}")]
    PoleInRange { k: i64, factor: String },
    #[error("monomial coefficient must be nonzero")]
    ZeroMonomial,
    #[error("cannot parse monomial literal {0:?}")]
    ParseMonomial(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("bad parameters: {0}")]
    Params(String),
    #[error("values are not pairwise distinct and nonzero")]
    DuplicateValues,
    #[error("pole at x: {0}")]
    PoleAtX(String),
    #[error("{id}: {source}")]
    Identity { id: String, source: Box<Error> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
