//! Exact-arithmetic structure theory for finite-dimensional Lie algebras
//! over the rationals.
//!
//! The crate takes a Lie algebra given by structure constants and computes,
//! with arbitrary-precision rational arithmetic throughout:
//!
//! - classical invariants: center, centralizers, normalizers, derived and
//!   lower central series, Killing form, radical, nilradical;
//! - a Levi subalgebra, a nilpotent supplement, and the splitting of the
//!   algebra into a triple (s, k, m) driven by a completely reducible
//!   algebra of derivations;
//! - the full derivation algebra, its centralizer machinery, and the
//!   reassembly of Der g from the triple data;
//! - the derivation tower g, Der g, Der(Der g), ... with its normalizer-chain
//!   shortcut for algebras with trivial center, a dimension bound, and a
//!   three-case classification of the tower's behavior;
//! - a JSON document format, a built-in catalog of fixtures, and a CLI.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything can be shared freely across threads.

// index arithmetic over parallel arrays reads better as plain ranges here
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod derivations;
pub mod doc;
pub mod error;
pub mod gamma;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod subspace;
pub mod tower;

pub use algebra::LieAlgebra;
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::Subspace;
