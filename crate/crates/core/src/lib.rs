//! Exact solver and constructive bounds for Cops and Eternal Robbers: the
//! cops must catch every one of infinitely many robbers, each within `t`
//! time-steps, starting each play from wherever the previous one ended.
//!
//! - [`graph`]: graphs, generators, products, retractions, small catalogs.
//! - [`engine`]: bounded and eternal game solving, strategy tables, replay.
//! - [`bounds`]: closed forms and decomposition bounds with certificates.
//! - [`reduction`]: the set cover construction and its brute-force check.
//! - [`verify`]: formula-versus-solver suites.
//! - [`cli`]: the command line.

pub mod bounds;
pub mod cli;
pub mod engine;
pub mod error;
pub mod graph;
pub mod reduction;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
