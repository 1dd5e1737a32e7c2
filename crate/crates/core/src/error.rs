use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid dimensions {height}x{width} outside 1..=30")]
    Dimensions { height: usize, width: usize },
    #[error("symbol {0} outside 0..=9")]
    SymbolOutOfRange(i64),
    #[error("expected {expected} cells, got {actual}")]
    CellCount { expected: usize, actual: usize },
    #[error("row {row} has a different length than row 0")]
    Ragged { row: usize },
    #[error("scale factors must be at least 1, got {fh}x{fw}")]
    ScaleFactor { fh: usize, fw: usize },
    #[error("pixel ({row}, {col}) lies outside the grid")]
    OutOfBounds { row: isize, col: isize },
    #[error("two pixels share coordinate ({row}, {col})")]
    DuplicatePixel { row: usize, col: usize },
    #[error("connectivity must be 4 or 8, got {0}")]
    Connectivity(u8),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SamplingError {
    #[error("difficulty bounds [{lo}, {hi}] must satisfy 0 <= lo <= hi <= 1")]
    InvalidBounds { lo: f64, hi: f64 },
    #[error("empty integer range [{lo}, {hi}]")]
    EmptyRange { lo: i64, hi: i64 },
    #[error("cannot choose from an empty sequence")]
    EmptyChoice,
    #[error("shape budget of {num_pixels} pixels does not fit a {max_h}x{max_w} box")]
    ShapeBudget {
        num_pixels: usize,
        max_h: usize,
        max_w: usize,
    },
}

/// Raised by a verifier when its input violates the task's input contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid input for {task}: {reason}")]
pub struct VerifyError {
    pub task: &'static str,
    pub reason: String,
}

impl VerifyError {
    pub(crate) fn new(task: &'static str, reason: impl Into<String>) -> Self {
        VerifyError {
            task,
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("unknown task id {0:?}")]
    UnknownTask(String),
    #[error(transparent)]
    Sampling(#[from] SamplingError),
    #[error("invalid run configuration: {0}")]
    Config(String),
    #[error("malformed example file: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
