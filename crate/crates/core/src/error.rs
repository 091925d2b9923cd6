use thiserror::Error;

/// Errors raised by exact evaluation, map application and codecs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("arithmetic with the point at infinity is only defined through a Moebius action")]
    InfiniteOperand,

    #[error("surds with different radicands cannot be combined: sqrt({0}) and sqrt({1})")]
    MixedRadicand(u64, u64),

    #[error("{map}: {value} is outside the domain {domain}")]
    Domain {
        map: &'static str,
        value: String,
        domain: &'static str,
    },

    #[error("{map}: orbit reaches a cusp at {value}")]
    Cusp { map: &'static str, value: String },

    #[error("{map}: {value} lies on a branch cut")]
    CutLine { map: &'static str, value: String },

    #[error("geodesic passes through the tessellation vertex {0}")]
    DegenerateCrossing(String),

    #[error("pole of {0}")]
    Pole(String),

    #[error("not a determinant-one integer matrix: {0}")]
    Determinant(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("codec: {0}")]
    Codec(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(map: &'static str, value: impl ToString, domain: &'static str) -> Error {
    Error::Domain {
        map,
        value: value.to_string(),
        domain,
    }
}

pub(crate) fn cusp(map: &'static str, value: impl ToString) -> Error {
    Error::Cusp {
        map,
        value: value.to_string(),
    }
}
