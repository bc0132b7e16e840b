use thiserror::Error;

use crate::BigCount;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image table is not a bijection of 1..={degree}")]
    NotABijection { degree: usize },

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("group order {order} exceeds cap {cap}")]
    OrderExceedsCap { order: BigCount, cap: u64 },

    #[error("stabilizer tag Other has no arc-transitivity value")]
    UnrecognizedStabilizer,

    #[error("no stabilizer table row for s = {s} (soluble = {soluble})")]
    UnknownS { s: u32, soluble: bool },

    #[error("{0} does not divide 80")]
    NotADivisorOf80(u64),

    #[error("generator file line {line}: {message}")]
    GeneratorFile { line: usize, message: String },

    #[error("embedded table data: {0}")]
    TableData(String),
}
