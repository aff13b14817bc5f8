//! Third-order WENO-Z reconstructions and the tooling to study them.

pub mod error;
pub mod indicators;
pub mod stencil;
pub mod weights;
pub mod solver;
pub mod harness;
pub mod config;
pub mod output;
pub mod runner;
