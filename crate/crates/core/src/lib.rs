pub mod error;
pub mod algebra;
pub mod blocks;
pub mod field;
pub mod fusion;
pub mod group;
pub mod linalg;
pub mod pipeline;
pub mod report;
pub mod stable;

pub use error::{Error, Result};
