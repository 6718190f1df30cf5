//! Boolean graphs and the simplicial complexes attached to them.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values: graphs and complexes are built once and
//! every operation returns a new value. IO, JSON and the command line live in
//! the `bcl` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bitset;
pub mod boolean;
pub mod complex;
pub mod decompose;
mod error;
pub mod graph;

pub use bitset::{VertexId, VertexSet};
pub use complex::SimplicialComplex;
pub use error::Error;
pub use graph::Graph;

/// Answer of a decision procedure that may run out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Undecided,
}
