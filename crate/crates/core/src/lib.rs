pub mod bijmaps;
pub mod cli;
pub mod error;
pub mod noncrossing;
pub mod paths;
pub mod qseries;
pub mod rootposets;
pub mod selftest;
pub mod signedperm;
pub mod sortable;

pub use error::{Error, Result};
