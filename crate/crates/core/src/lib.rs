//! Exact computations for symmetrizable Kac-Moody algebras at rational weights:
//! root systems, (integral) Weyl groups, Kazhdan-Lusztig combinatorics of the
//! monodromic Hecke modules, and truncated characters of highest weight modules.
//!
//! Everything is exact; weights carry rational fundamental coordinates and all
//! infinite objects are cut off at an explicit height bound.

pub mod cartan;
pub mod characters;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod integral;
pub mod laurent;
pub mod roots;
pub mod weyl;

pub use cartan::{CartanDatum, Component, Kind, ModuleWeight, Rational, RootLatticeVector, Weight};
pub use error::{Error, Result};

#[cfg(feature = "oracles")]
pub mod oracles;
