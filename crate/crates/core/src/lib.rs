//! Power graphs of cyclic groups and their automorphism groups.
//!
//! The power graph of Z_n joins distinct `x`, `y` when one is a multiple of
//! the other. [`aut`] computes automorphism groups of arbitrary graphs
//! exactly; [`theorem`] gives the closed-form order for power graphs and
//! checks the facts behind it.

pub mod arithmetic;
pub mod aut;
pub mod cli;
pub mod error;
pub mod graph;
pub mod injection;
pub mod powergraph;
pub mod theorem;

pub use error::{Error, Result};
