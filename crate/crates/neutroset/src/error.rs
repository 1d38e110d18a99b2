use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid frame: psi must be <= 0, omega >= 1, psi < omega (channel {channel}: psi={psi}, omega={omega})")]
    InvalidFrame {
        channel: char,
        psi: String,
        omega: String,
    },
    #[error("invalid rational literal: {0:?}")]
    BadRational(String),
    #[error("empty subset value: no degree supplied")]
    EmptyValue,
    #[error("invalid interval piece: lo={lo}, hi={hi} (lo must be < hi, or lo = hi with both endpoints closed)")]
    BadPiece { lo: String, hi: String },
    #[error("component {component} of {id:?} out of frame range [{psi}, {omega}]: {value}")]
    OutOfFrame {
        id: String,
        component: String,
        value: String,
        psi: String,
        omega: String,
    },
    #[error("frame mismatch between operands")]
    FrameMismatch,
    #[error("element id domains differ: {0}")]
    DomainMismatch(String),
    #[error("empty collection")]
    EmptyCollection,
    #[error("duplicate element id {0:?}")]
    DuplicateId(String),
    #[error("arity violation for refined form: {0}")]
    ArityViolation(String),
    #[error("intuitionistic constraint violated: sum of sup T plus sum of sup F exceeds 1 ({0})")]
    IntuitionisticConstraint(String),
    #[error("degenerate thresholds: tau_lo must be < tau_hi (got {lo}, {hi})")]
    DegenerateThresholds { lo: String, hi: String },
    #[error("degree out of [0, 1]: {0}")]
    BadDegree(String),
    #[error("label index {index} outside extended scale [{min}, {max}]")]
    IndexOutOfScale { index: i64, min: i64, max: i64 },
    #[error("label scale needs at least two labels")]
    ScaleTooSmall,
    #[error("crisp value required, got {0}")]
    NonCrisp(String),
    #[error("swap complement requires matching T and F channel bounds")]
    SwapNeedsSymmetricFrame,
    #[error("pole sequence must be strictly increasing inside (0, 1): {0}")]
    BadPoles(String),
    #[error("pole/triple arity mismatch: {0}")]
    PoleArity(String),
    #[error("edge endpoint {0:?} not among vertices")]
    DanglingEdge(String),
    #[error("matrix is not rectangular or is empty")]
    BadMatrixShape,
    #[error("empty structure input: {0}")]
    EmptyInput(String),
    #[error("modulus must be >= 1")]
    BadModulus,
    #[error("residue {residue} not reduced modulo {modulus}")]
    BadResidue { residue: u64, modulus: u64 },
    #[error("group sizes and pairs exceed the subcomponent count: {0}")]
    GroupOverflow(String),
    #[error("invalid bounds: lo must be <= hi ({0})")]
    BadBounds(String),
    #[error("unknown event {0:?} in sample (no rule)")]
    UnknownEvent(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
