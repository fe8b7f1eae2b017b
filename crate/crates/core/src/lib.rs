pub mod arith;
pub mod cli;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod reductions;
mod serde_util;
pub mod weyl;

pub use error::{Error, Result};
