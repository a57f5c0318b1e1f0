use thiserror::Error;

use crate::topotype::Condition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("{0} is out of range (limit 65536)")]
    OutOfRange(&'static str),

    #[error("extended type needs g - k + 1 even, got g={g}, k={k}")]
    IllFormedExtension { g: u32, k: usize },

    #[error("type {ty} does not exist: {}", list_conditions(.violated))]
    Nonexistent {
        ty: String,
        violated: Vec<Condition>,
    },

    #[error("type {0} admits extension; supply the extended type with a xi value")]
    AdmitsExtension(String),

    #[error("type {0} has a zero index; it has no graphs")]
    ZeroIndex(String),

    #[error("{0}")]
    Precondition(String),

    #[error("work limit of {limit} candidate structures exceeded")]
    WorkLimit { limit: u64 },

    #[error("malformed graph: {0}")]
    Graph(String),

    #[error("json: {0}")]
    Json(String),
}

fn list_conditions(cs: &[Condition]) -> String {
    cs.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
