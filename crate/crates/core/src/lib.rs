//! Spectral tools for the Randić matrix of a simple graph.
//!
//! For a graph `G` with degrees `d_i` and no isolated vertex, the Randić
//! matrix `R` has entry `1/√(d_i d_j)` for every edge `ij` and zero
//! elsewhere. The crate builds `R`, the normalized Laplacian `I - R` and the
//! normalized signless Laplacian `I + R`, computes their spectra with a
//! dense Jacobi eigensolver, and checks numerically the identities that tie
//! these spectra to subdivisions, Randić energy and the number of distinct
//! eigenvalues.
//!
//! ```
//! use randic::graph::{generate, GraphKind};
//! use randic::spectra::randic_energy;
//!
//! let star = generate(GraphKind::Star, 5)?;
//! let sun = star.subdivision();
//! let energy = randic_energy(&sun)?;
//! let closed_form = 5.0 * 2f64.sqrt() + 2.0 - 2.0 * 2f64.sqrt();
//! assert!((energy - closed_form).abs() < 1e-9);
//! # Ok::<(), randic::Error>(())
//! ```
//!
//! The guide under `book/` walks through each module; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod spectra;
pub mod theorems;

pub use error::{Error, ErrorClass, Result};
pub use graph::Graph;
pub use linalg::{Spectrum, SymMatrix};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/eigensolver.md")]
    mod eigensolver {}
    #[doc = include_str!("../../../book/src/matrices.md")]
    mod matrices {}
    #[doc = include_str!("../../../book/src/subdivision.md")]
    mod subdivision {}
    #[doc = include_str!("../../../book/src/distinct-eigenvalues.md")]
    mod distinct_eigenvalues {}
    #[doc = include_str!("../../../book/src/scanning.md")]
    mod scanning {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
