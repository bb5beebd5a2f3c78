use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the engine.
///
/// Variants map to the failure classes the contracts name: shape mismatches,
/// numeric blow-ups, precondition/invariant violations, unparseable inputs,
/// and oracle failures (which callers are expected to degrade on, not abort).
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("not ready: {0}")]
    NotReady(String),

    #[error("parse error at {context}: {message}")]
    Parse { context: String, message: String },

    #[error("oracle failure: {0}")]
    Oracle(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("task {task} / {phase}: {source}")]
    Run {
        task: usize,
        phase: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Tag an error with the benchmark phase it occurred in.
    pub fn in_phase(self, task: usize, phase: &'static str) -> Error {
        Error::Run {
            task,
            phase,
            source: Box::new(self),
        }
    }
}
