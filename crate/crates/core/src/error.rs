use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: left operand has degree {left}, right operand has degree {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("degree {got} is too small, need at least {required}")]
    DegreeTooSmall { required: usize, got: usize },

    #[error("image value {value} out of range for degree {degree}")]
    InvalidImage { value: usize, degree: usize },

    #[error("point {point} out of range 1..={degree}")]
    InvalidPoint { point: usize, degree: usize },

    #[error("point {point} repeated in cycle")]
    DuplicatePoint { point: usize },

    #[error("slot {slot} out of range 1..={count}")]
    SlotOutOfRange { slot: usize, count: usize },

    #[error("tail must be a full transformation")]
    TailNotFull,

    #[error("tail degree {tail} does not match component count {components}")]
    TailDegree { components: usize, tail: usize },

    #[error("map does not preserve the block partition")]
    NotPartitionPreserving,

    #[error("symbol `{0}` bound more than once")]
    DuplicateSymbol(String),

    #[error("unbound symbol `{0}`")]
    UnboundSymbol(String),

    #[error("generator `{symbol}` has a different shape from the others")]
    ShapeMismatch { symbol: String },

    #[error("an alphabet needs at least one symbol")]
    EmptyAlphabet,

    #[error("a closure needs at least one generator")]
    EmptyGenerators,

    #[error("generator {index} has a different shape from generator 0")]
    GeneratorShapeMismatch { index: usize },

    #[error("element index {index} out of range for a monoid of {size} elements")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("congruences live on carriers of different sizes ({left} vs {right})")]
    MismatchedCarriers { left: usize, right: usize },

    #[error("enumeration limit of {limit} elements exceeded")]
    LimitExceeded { limit: usize },

    #[error("relation uses symbol `{symbol}` missing from the presentation alphabet")]
    UnknownRelationSymbol { symbol: String },

    #[error("got {names} names for {generators} generators")]
    NameCount { names: usize, generators: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
