//! Simulation and verification toolkit for time-changed compound Poisson
//! processes.
//!
//! The crate samples subordinators and their right-continuous inverses,
//! builds compound Poisson paths under a family of jump laws, evaluates the
//! closed-form moments and special functions of the time-changed processes,
//! and numerically verifies the governing fractional differential-difference
//! equations against Monte Carlo output.
//!
//! Start from the `examples/` directory for runnable end-to-end drivers, or
//! from [`processes::simulate_gfcpp`] for the core path sampler.

pub mod analytics;
pub mod cli;
pub mod config;
pub mod error;
pub mod fde;
pub mod jumps;
pub mod processes;
pub mod rng;
pub mod specfun;
pub mod subordinators;

pub use error::{GfcppError, Result};
pub use rng::RngStream;
pub use specfun::BernsteinDescriptor;
