//! Perfect matchings and Hamiltonian cycles in line graphs.
//!
//! [`line_graph`] builds `L(G)` and its clique partition, [`matching`]
//! moves between perfect matchings of `L(G)` and path decompositions of
//! `G`, and [`engine`] extends matchings to Hamiltonian cycles and decides
//! the PMH property exactly. [`verify`] re-checks any witness on its own.

pub mod budget;
pub mod constructions;
pub mod cycles;
pub mod engine;
pub mod error;
pub mod generate;
pub mod graph;
pub mod line_graph;
pub mod matching;
pub mod verify;

pub use budget::{Budget, Meter};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/line-graphs.md")]
    mod line_graphs {}
    #[doc = include_str!("../../../book/src/cycles.md")]
    mod cycles {}
    #[doc = include_str!("../../../book/src/extending.md")]
    mod extending {}
    #[doc = include_str!("../../../book/src/surgeries.md")]
    mod surgeries {}
    #[doc = include_str!("../../../book/src/limits.md")]
    mod limits {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
