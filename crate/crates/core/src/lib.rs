//! Chord graphs of the cycle `C_n` and the machinery to check their colouring
//! properties.
//!
//! The crate builds the Kneser graphs `KG(n,k)`, the Schrijver graphs
//! `SG(n,k)`, the spanning subgraph `G_n` of `SG(n,2)` whose edges are the
//! crossing and transverse chord pairs, and iterated Mycielski graphs. On top
//! of those it provides:
//!
//! * an exact colouring solver ([`solver`]) used as independent ground truth,
//! * explicit `(n-3)`-colourings of `G_n - e` for every edge `e`
//!   ([`criticality`]),
//! * the homomorphism `M(G_{n-1}) -> G_n` and the inductive lower bound built
//!   from it ([`homomorphism`]).
//!
//! Everything here is pure computation over `alloc`; file formats, parallel
//! sweeps and the command line live in the `edgecrit` crate.
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod chord;
pub mod criticality;
mod error;
pub mod generators;
pub mod graph;
pub mod homomorphism;
pub mod solver;

pub use chord::{Chord, ChordSpace, PairClass, StableSet};
pub use error::{Error, Result};
pub use graph::{Coloring, ColoringVerdict, Edge, Graph, VertexId};
