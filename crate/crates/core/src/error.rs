use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0}")]
    InvalidPartition(String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    Containment { outer: String, inner: String },

    #[error("cutting strip covers contents {strip_min}..={strip_max} but the shape needs {need_min}..={need_max}")]
    ProfileMismatch {
        strip_min: i32,
        strip_max: i32,
        need_min: i32,
        need_max: i32,
    },

    #[error("no value bound for variable {0}")]
    UnboundVariable(String),

    #[error("matrix shape error: {0}")]
    Shape(String),

    #[error("filling does not match the decomposition: {0}")]
    ShapeMismatch(String),

    #[error("shift parameter is undefined for a null or empty strip")]
    UndefinedShift,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short name of the error class, used as a message prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::Containment { .. } => "ContainmentError",
            Error::ProfileMismatch { .. } => "ProfileMismatch",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::Shape(_) => "ShapeError",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::UndefinedShift => "UndefinedShift",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
