use thiserror::Error;

use crate::growth::DimSequence;
use crate::scalars::UniPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scalars from different quadratic fields: Q(sqrt({0})) and Q(sqrt({1}))")]
    FieldMismatch(i64, i64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid quadratic field parameter d = {0} (must be squarefree, nonzero and not 1)")]
    InvalidQuadraticField(i64),

    #[error("no root extractable: residual factor {0} has degree >= 3")]
    ResidualDegreeTooHigh(UniPoly),

    #[error("not a root: p({0}) != 0")]
    NotARoot(String),

    #[error("generator {0} is not invertible and cannot take a negative power")]
    NegativePower(String),

    #[error("rewrite step limit of {0} exceeded (rule set may not terminate)")]
    StepLimitExceeded(u64),

    #[error(
        "rule {lhs} -> {rhs} is not oriented: {offending} is not smaller than the left-hand side"
    )]
    UnorientedRule {
        lhs: String,
        rhs: String,
        offending: String,
    },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("presentation fails the Hopf axioms: {0}")]
    AxiomFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("window has more than {cap} candidate words")]
    WindowTooLarge { cap: usize },

    #[error("element is not skew-primitive")]
    NotSkewPrimitive,

    #[error("classification failed: {0}")]
    ClassificationFailure(String),

    #[error("conjugates g^i y g^-i are linearly independent up to i = {0}")]
    NoRelation(usize),

    #[error("every root yields f in k(g^b - 1)")]
    DegenerateF,

    #[error("identity check failed: {0}")]
    Falsification(String),

    #[error("dimension cap of {cap} basis elements exceeded after {} layers", partial.dims.len())]
    DimensionCap { cap: usize, partial: DimSequence },

    #[error("need at least 8 terms of the dimension sequence, got {0}")]
    InsufficientData(usize),

    #[error("no non-nilpotent witness among basis vectors and pairwise sums")]
    NoWitness,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
