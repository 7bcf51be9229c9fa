pub mod analysis;
pub mod arith;
pub mod corpus;
pub mod curve;
pub mod error;
pub mod oracle;
pub mod polygon;
pub mod predict;
pub mod puiseux;
pub mod tree;

pub use error::{Error, Result};
