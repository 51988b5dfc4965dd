//! Exact computation of Hopf cyclic homology: cyclic modules of Hopf algebras
//! with modular pairs, their operator identities, and Hochschild and cyclic
//! homology by exact sparse linear algebra.

pub mod check;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod homology;
pub mod hopf;
pub mod instances;
pub mod linalg;

pub use error::{Error, Result};
