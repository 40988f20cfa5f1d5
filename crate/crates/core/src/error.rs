use thiserror::Error;

/// Errors produced by the library. The CLI maps each variant onto an exit code
/// through [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: allowed ranks are {allowed}")]
    InvalidRank {
        family: char,
        rank: usize,
        allowed: &'static str,
    },

    #[error("unknown Cartan family {0:?}: expected one of A, B, C, D, E, F, G")]
    UnknownFamily(String),

    #[error("letter {letter} is out of range for a rank-{rank} system (letters are 1..={rank})")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("vector {coeffs:?} is not a root of {system}")]
    NotARoot { coeffs: Vec<i32>, system: String },

    #[error("vector has {got} coordinates but the system has rank {rank}")]
    DimensionMismatch { got: usize, rank: usize },

    #[error("word {word} is not reduced: {detail}")]
    NotReduced { word: String, detail: String },

    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("position {0} appears more than once in the diagram")]
    DuplicatePosition(usize),

    #[error("obstruction needs 1 <= j < m <= t with m in the diagram (got j = {j}, m = {m})")]
    ObstructionDomain { j: usize, m: usize },

    #[error("grid shape {p}x{m} is invalid: both sides must be at least 1")]
    InvalidShape { p: usize, m: usize },

    #[error("box ({row},{col}) lies outside the {p}x{m} grid")]
    BoxOutOfRange {
        row: usize,
        col: usize,
        p: usize,
        m: usize,
    },

    #[error("sweep over a word of length {len} exceeds the cap of {cap} positions")]
    SweepCap { len: usize, cap: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("malformed wiring drawing: {0}")]
    Wiring(String),

    #[error("cannot write {path}: {reason}")]
    Output { path: String, reason: String },
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Usage,
    Precondition,
    SizeCap,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. }
            | Error::UnknownFamily(_)
            | Error::InvalidRank { .. }
            | Error::InvalidShape { .. } => ErrorKind::Usage,
            Error::SweepCap { .. } => ErrorKind::SizeCap,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
