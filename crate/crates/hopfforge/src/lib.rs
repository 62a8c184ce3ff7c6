//! Exact construction and verification of finite-dimensional copointed Hopf
//! algebras over the dihedral groups D_m, m = 4a ≥ 12.

pub mod deform;
pub mod dihedral;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod nichols;
pub mod report;
pub mod scalar;
pub mod yd;

pub use scalar::{CycScalar, GroupDatum, ScalarError};
