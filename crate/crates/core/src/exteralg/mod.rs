//! Exterior algebra over a finite-dimensional space with a fixed basis, and the
//! exact linear algebra everything else is built on.

mod linalg;
mod multivector;

pub use linalg::{Matrix, SparseEchelon, SubspaceBasis};
pub use multivector::{Blade, Multivector, WedgeBasis, MAX_DEGREE};

pub(crate) use linalg::dot;
