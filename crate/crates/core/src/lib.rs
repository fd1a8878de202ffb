//! Equipped multigraphs of surface flows.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod invariants;
pub mod iso;
pub mod model;
pub mod realization;

pub use error::{Error, Result};
pub use model::{validate_equipped, validate_four_colour};
