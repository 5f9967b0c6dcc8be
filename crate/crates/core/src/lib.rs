pub mod analytics;
pub mod classify;
pub mod error;
pub mod generators;
pub mod matcher;
pub mod pattern;
pub mod search;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{Morphism, Symbol, Word};
