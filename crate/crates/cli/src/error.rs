use thiserror::Error;

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] comblab_core::Error),

    #[error("{what}: {size} exceeds cap {cap}")]
    Cap { what: &'static str, size: usize, cap: usize },

    #[error("unknown suite {0:?}; expected one of {1}")]
    UnknownSuite(String, String),

    #[error("malformed config: {0}")]
    Config(String),
}
