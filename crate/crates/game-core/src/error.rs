use thiserror::Error;

/// Errors produced while parsing, validating, or querying a game.
#[derive(Debug, Error)]
pub enum GameError {
    /// Malformed JSON or a field that does not deserialize.
    #[error("json error: {0}")]
    Json(String),
    /// The tree violates a structural rule (ids, reachability, probabilities,
    /// information sets, perfect recall, ...).
    #[error("invalid game: {0}")]
    Validation(String),
    /// An enumeration (strategies, strategy profiles) exceeds the hard cap.
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
    /// The operation is only defined for a restricted class of games.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A lookup by name/id failed.
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, GameError>;
