//! Exact combinatorics of `k`-uniform set families and their degree sequences.

pub mod classify;
pub mod cli;
pub mod cubes;
pub mod degseq;
pub mod error;
pub mod families;
pub mod hwv;
pub mod lp;
pub mod symfunc;
pub mod verify;
pub mod zonotope;

pub use error::{Error, Result};
