use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 65536")]
    InvalidPrime(u32),

    #[error("degree {degree} is outside [-{top}, 0] for the exterior algebra on {top} variables")]
    DegreeOutOfRange { degree: i32, top: usize },

    #[error("contexts disagree: {0}")]
    ContextMismatch(String),

    #[error("entry ({row}, {col}) has degree {found}, expected {expected}")]
    Inhomogeneous { row: usize, col: usize, expected: i32, found: i32 },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("slice window too small: {what} needs degrees up to {required}, window ends at {available}")]
    WindowTooSmall { what: String, required: i32, available: i32 },

    #[error("zero module: {0}")]
    ZeroModule(String),

    #[error("map is not minimal: entry ({row}, {col}) is a unit")]
    NotMinimal { row: usize, col: usize },

    #[error("point is not in X^0: coker of the dual has regularity {regularity} (certified: {certified})")]
    NotInX0 { regularity: i32, certified: bool },

    #[error("regularity not certified after {steps} steps (partial maximum row {partial})")]
    Uncertified { steps: usize, partial: i32 },

    #[error("entry ({row}, {col}) is not a linear form")]
    NonLinear { row: usize, col: usize },

    #[error("not a complex: composite of differentials at position {position} is nonzero")]
    NotAComplex { position: i32 },

    #[error("multiplication maps do not commute: x{a} and x{b} from degree {degree}")]
    NotCommutative { a: usize, b: usize, degree: i32 },

    #[error("position {position} outside window [{lo}, {hi}]")]
    OutOfWindow { position: i32, lo: i32, hi: i32 },

    #[error("no linear differential at positions >= {from} in the window")]
    NoLinearDifferential { from: i32 },

    #[error("reconstructed table has type ({found_b:?}, {found_bprime:?}), expected ({b:?}, {bprime:?})")]
    TypeMismatch { b: Vec<usize>, bprime: Vec<usize>, found_b: Vec<usize>, found_bprime: Vec<usize> },

    #[error("invalid argument: {0}")]
    Invalid(String),
}
