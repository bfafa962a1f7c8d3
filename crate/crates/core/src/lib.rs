//! Exact invariants of one-parameter polynomial families of affine
//! hypersurfaces: polar intersection numbers, their special values and
//! defects, Milnor numbers, Euler characteristics and cell models, together
//! with the equisingularity-at-infinity verdicts they determine.
//!
//! All arithmetic is exact over the rationals; geometric point counts are
//! vector-space dimensions of quotient algebras, never numerical roots.

pub mod cli;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod report;
pub mod univar;

pub use poly::{Polynomial, Rational, VarSet};

/// Entry point shared by the `equising` binary; returns the process exit code.
pub fn run_cli() -> i32 {
    cli::run_from_env()
}
