//! Homotopy invariants of real and complex spectra of finitely presented
//! commutative binoids, binoid schemes and Stanley-Reisner complexes.

pub mod binoid;
pub mod cli;
pub mod error;
pub mod groupoid;
pub mod homology;
pub mod linalg;
pub mod pi0;
pub mod scheme;
pub mod stanley_reisner;

pub use error::{Error, Result};
