use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol {symbol} at position {position} is outside alphabet of size {alphabet_size}")]
    SymbolOutOfRange {
        symbol: u8,
        position: usize,
        alphabet_size: u8,
    },
    #[error("invalid word text: {0}")]
    WordParse(String),
    #[error("invalid pattern text: {0}")]
    PatternParse(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("{0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource guard exceeded: {0}")]
    ResourceGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
