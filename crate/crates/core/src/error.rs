use thiserror::Error;

/// Errors raised by the arithmetic, series and geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scale mismatch: {left} vs {right}")]
    ScaleMismatch { left: u32, right: u32 },

    #[error("square root of a negative value")]
    NegativeSqrt,

    #[error("malformed decimal string {0:?}")]
    Parse(String),

    #[error("term count must be at least 1")]
    ZeroTerms,

    #[error("a correction term is only defined for the leibniz series")]
    CorrectionNotAllowed,

    #[error("{what}: argument {value} outside the allowed domain ({bound})")]
    OutOfDomain {
        what: &'static str,
        value: String,
        bound: &'static str,
    },

    #[error("{series} needs more than {cap} terms for {digits} digits")]
    Infeasible {
        series: &'static str,
        digits: u32,
        cap: u64,
    },

    #[error("side lengths must be positive")]
    NonPositiveSide,

    #[error("not a cyclic-quadrilateral side set: bracket {index} is {value}")]
    DegenerateQuadrilateral { index: usize, value: String },

    #[error("angles must be strictly increasing in [0, 2pi)")]
    BadAngles,

    #[error("invalid Julian calendar date {year}-{month:02}-{day:02}")]
    InvalidDate { year: i64, month: u8, day: u8 },
}

pub type Result<T> = std::result::Result<T, Error>;
