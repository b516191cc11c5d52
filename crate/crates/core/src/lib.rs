//! Perfect-matching cover invariants of cubic graphs.

pub mod error;
pub mod families;
pub mod cores;
pub mod graphcore;
pub mod harness;
pub mod invariants;
pub mod matchings;

pub use error::{Error, Result};
pub use graphcore::{EdgeSet, Graph};
