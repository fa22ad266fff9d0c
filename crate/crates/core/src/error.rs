use thiserror::Error;

/// Errors raised by plane models and the constructions built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("handle does not belong to plane model {model}")]
    ModelMismatch { model: String },
    #[error("cannot join a point with itself")]
    DegenerateJoin,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("no unique line through the two points")]
    NoUniqueJoin,
    #[error("no unique parallel through the point")]
    NoUniqueParallel,
    #[error("invalid plane order {0}: must be a prime between 2 and {max}", max = crate::models::MAX_FINITE_ORDER)]
    InvalidOrder(u64),
    #[error("auxiliary point {0} lies on the frame line")]
    InvalidAuxiliary(String),
    #[error("operand {name} = {point} is not on the frame line")]
    InvalidOperand { name: &'static str, point: String },
    #[error("invalid frame: {0}")]
    InvalidFrame(&'static str),
    #[error("coordinates ({0}) do not name a point of {1}")]
    NotAPoint(String, String),
    #[error("operation requires a finite plane model")]
    UnsupportedModel,
    #[error("candidate set is empty")]
    EmptyCandidates,
    #[error("construction step `{0}` produced no single intersection point")]
    ConstructionFailed(&'static str),
}

/// Errors from the textual front ends: point syntax, model selectors and
/// serialized Cayley tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expected a point `x,y`, got `{0}`")]
    PointSyntax(String),
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("unknown model `{0}` (expected ag2:<p>, rational or moulton)")]
    UnknownModel(String),
    #[error("invalid plane order in `{0}`")]
    Order(String),
    #[error("malformed Cayley table document: {0}")]
    Table(String),
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
