use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("tile id {0} is outside 0..=10")]
    InvalidTile(i64),

    #[error("malformed mosaic: {0}")]
    MalformedMosaic(String),

    #[error("malformed fixture file at line {line}: {reason}")]
    MalformedFixture { line: usize, reason: String },

    #[error("mosaic is not toroidally suitably connected")]
    NotSuitablyConnected,

    #[error("{what} exceeds budget ({size} > {limit})")]
    BudgetExceeded { what: &'static str, size: String, limit: String },

    #[error("malformed planar diagram: {0}")]
    MalformedDiagram(String),

    #[error("cannot parse link name {0:?}")]
    BadLinkName(String),

    #[error("link {0:?} is not in the identification dictionary")]
    UnknownLink(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
