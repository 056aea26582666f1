//! Exact computations with Lie superalgebras, Grassmann algebras, abelian
//! Hopf superalgebras and their coactions, over the rationals.

pub mod commands;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod grassmann;
pub mod hopf;
pub mod jordan;
pub mod derivations;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod points;
pub mod poly;
pub mod random;
pub mod report;
pub mod scalar;
pub mod supermatrix;

pub use error::{Error, Result};
pub use scalar::{Parity, Scalar};
