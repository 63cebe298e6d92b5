//! Exact construction of homomorphisms from Specht modules to signed
//! permutation modules of the symmetric group.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exact_linalg;
pub mod hom_builder;
pub mod signed_module;
pub mod specht;
pub mod symgroup;

pub use error::{Error, Result};
