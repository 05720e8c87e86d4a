//! Generalized Sierpiński graphs `S(G,t)` and generalized Sierpiński gaskets
//! `S[G,t]` over arbitrary simple base graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It covers
//!
//! * [`base`]: small base graphs with exact clique/chromatic solvers,
//! * [`label`]: words, canonical gasket labels and their text grammar,
//! * [`build`]: explicit construction of both graph families,
//! * [`oracle`]: neighbor queries answered from labels alone,
//! * [`coloring`]: constructive gasket colorings and a properness verifier,
//! * [`analysis`]: structural checks of the clique/chromatic results and the
//!   per-instance profile used by conjecture sweeps.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod base;
pub mod bitset;
pub mod build;
pub mod coloring;
pub mod corners;
pub mod dsu;
mod error;
pub mod graph6;
pub mod label;
pub mod oracle;
pub mod solve;

pub use base::{BaseGraph, GraphClass};
pub use build::{build_gasket, build_sierpinski, GraphKind, MaterializedGraph, DEFAULT_VERTEX_CAP};
pub use error::{Error, Result};
pub use label::{canonicalize, VertexLabel, Word};
pub use oracle::OracleContext;
