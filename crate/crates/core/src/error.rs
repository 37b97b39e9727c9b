use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {unreachable} is unreachable from {base}")]
    DisconnectedGraph { base: usize, unreachable: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error(
        "not distance-regular: {kind} at distance {distance} is {found} for pair ({x}, {y}) \
         but {expected} elsewhere"
    )]
    NotDistanceRegular {
        x: usize,
        y: usize,
        distance: usize,
        kind: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("spectrum is not rational: eigenvalue #{index} is only known numerically")]
    IrrationalSpectrum { index: usize },

    #[error("negative Krein parameter q^{h}_{{{i}{j}}} = {value}")]
    NegativeKrein { h: usize, i: usize, j: usize, value: String },

    #[error("construction needs {requested} vertices, budget is {budget}")]
    BudgetExceeded { requested: u128, budget: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unsupported field: GF({0}^2) is not available (supported r: 2, 3)")]
    UnsupportedField(u32),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("module is not thin (slice at layer {layer} has dimension {dim})")]
    NotThin { layer: usize, dim: usize },

    #[error("basis is not a ladder: {0}")]
    NotALadder(String),

    #[error("no suitable module decomposition available: {0}")]
    DecompositionUnavailable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
