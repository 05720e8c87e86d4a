//! File formats, configuration, the sweep harness and the `gasketlab`
//! command line, on top of `gasket-core`.

pub mod cache;
pub mod cli;
pub mod config;
pub mod export;
pub mod input;
pub mod sweep;
