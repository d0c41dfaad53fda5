use thiserror::Error;

use crate::cli::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A truncated computation was asked for a region it cannot certify.
    #[error("window underflow: {0}")]
    WindowUnderflow(String),

    #[error("composition requires the inner series to have zero constant term")]
    CompositionConstantTerm,

    #[error("series is not odd: nonzero coefficient at even degree {degree}")]
    NotOddSeries { degree: usize },

    #[error("the constant c must be nonzero (use the two-relation builder with W = 0 instead)")]
    ZeroConstant,

    #[error("bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("entry ({j},{k}) violates the series support (dbound {dbound}, window {window})")]
    OutsideSupport {
        j: usize,
        k: usize,
        dbound: i64,
        window: usize,
    },

    #[error("invalid number literal {0:?}")]
    Number(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{0}")]
    Format(String),
}
