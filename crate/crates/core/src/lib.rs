//! α singular values and α trace norm of digraphs.
//!
//! * [`digraph`]: the combinatorial model and its text format.
//! * [`spectra`]: `A_α` matrices, Jacobi eigensolver, singular values.
//! * [`variation`]: trace norm change under arc and vertex deletion.
//! * [`families`]: paths, cycles, oriented trees and unicyclic digraphs.
//! * [`verify`]: exhaustive sweeps over the families.
//! * [`cli`]: the `tracenorm` command line front end.

pub mod cli;
pub mod digraph;
pub mod error;
pub mod families;
pub mod spectra;
pub mod variation;
pub mod verify;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use spectra::{AlphaParam, SingularSpectrum};

/// Absolute tolerance for equality and bound comparisons.
pub const EQUALITY_TOL: f64 = 1e-9;
