use thiserror::Error;

use crate::exactalg::Scalar;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("`{dividend}` is not divisible by `{divisor}`")]
    InexactDivision { dividend: String, divisor: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("symbol `{0}` is not declared for this computation")]
    UndeclaredSymbol(String),

    #[error("invalid b-sequence: {0}")]
    InvalidBSeq(String),
    #[error("invalid power sequence: {0}")]
    InvalidPowers(String),
    #[error("continued fraction supplies {available} levels but {needed} are required")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("depth {depth} exceeds the available range 0..={max}")]
    DepthOutOfRange { depth: usize, max: usize },
    #[error("constant term must be 1, found `{0}`")]
    NonUnitConstantTerm(String),
    #[error("series has order {available} but order {needed} is required")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("index {index} out of range: {msg}")]
    IndexOutOfRange { index: i64, msg: String },
    #[error("b-sequence too short: largest value {largest} is below the requested bound {needed}")]
    InsufficientLength { needed: i64, largest: i64 },
    #[error("series is not of the form 1/(1 - a*x^{p}*g(x)): {msg}")]
    NotOfForm { p: u32, msg: String },

    #[error("unsupported family `{0}`")]
    UnsupportedFamily(String),
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("unknown builtin series `{0}`")]
    UnknownName(String),
    #[error("Hankel determinant of size {n} at offset {offset} vanishes; {} coefficients recovered before it", partial.len())]
    ZeroDeterminant {
        n: usize,
        offset: i64,
        partial: Vec<Scalar>,
    },
}
