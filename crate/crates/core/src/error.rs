use thiserror::Error;

/// Errors raised by frame construction, mass validation and the combination rules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("frame has {n} hypotheses, enumeration is limited to {limit}")]
    FrameTooLarge { n: usize, limit: usize },

    #[error("frame mismatch: {0}")]
    FrameMismatch(String),

    #[error("unknown label `{label}` at position {pos}")]
    UnknownLabel { label: String, pos: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("the empty proposition has no irreducible form")]
    EmptyProposition,

    #[error("negative mass {mass} on `{prop}`")]
    NegativeMass { prop: String, mass: f64 },

    #[error("mass {0} committed to the empty set")]
    MassOnEmpty(f64),

    #[error("masses sum to {0}, expected 1")]
    NotNormalized(f64),

    #[error("`{0}` is not a union of singletons and cannot live on the power set")]
    NotInPowerSet(String),

    #[error("operation requires {expected} mode")]
    DomainMode { expected: &'static str },

    #[error("belief values missing for `{0}`")]
    MissingSubset(String),

    #[error("belief values are not a belief function: m({prop}) = {mass}")]
    NotABeliefFunction { prop: String, mass: f64 },

    #[error("sources are totally contradictory (K = {k})")]
    TotalContradiction { k: f64 },

    #[error("sources are in full conflict: normalization constant is zero")]
    FullConflict,

    #[error("invalid probability vector: {0}")]
    InvalidDistribution(String),

    #[error("conditioning impossible: {0}")]
    ConditioningImpossible(String),

    #[error("total mass is zero")]
    ZeroTotal,

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("division of a set by zero")]
    DivisionByZero,

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("neutrosophic component is not {0}")]
    ComponentShape(&'static str),

    #[error("report uses {0} generators, at most 5 are supported")]
    GeneratorBudget(usize),

    #[error("invalid report: {0}")]
    InvalidReport(String),
}

pub type Result<T> = std::result::Result<T, Error>;
