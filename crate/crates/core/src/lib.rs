pub mod acceptance;
pub mod bitset;
pub mod burnside;
pub mod error;
pub mod frobenius;
pub mod fusion;
pub mod group;
pub mod gset;
pub mod linalg;
pub mod stable;

pub use error::{Error, Result};
