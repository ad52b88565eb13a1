//! The splitting of `∧³g` into the 𝔰-modules `M1 … M8`:
//!
//! | module | spanned by                                |
//! |--------|-------------------------------------------|
//! | M1     | `s ∧ d_{2i-1} ∧ d_{2i}`                   |
//! | M2     | `z ∧ d_{2i-1} ∧ d_{2i}`                   |
//! | M3     | `d ∧ d ∧ d`                               |
//! | M4     | `s ∧ P_i ∧ P_j`, `i < j`                  |
//! | M5     | `z ∧ P_i ∧ P_j`, `i < j`                  |
//! | M6     | `s ∧ z ∧ d`                               |
//! | M7     | `s ∧ s ∧ d`                               |
//! | M8     | `z ∧ z ∧ d`                               |
//!
//! Trivectors with no `d` factor belong to none of them.

use crate::exteralg::Multivector;
use crate::flatliealg::{BasisKind, FlatLieAlgebra};
use crate::scalar::Scalar;

/// Module number (1..=8) of a basis trivector, or `None`.
pub fn module_of<S: Scalar>(g: &FlatLieAlgebra<S>, indices: &[usize]) -> Option<u8> {
    let idx: Vec<_> = indices.iter().map(|&i| g.basis_index(i)).collect();
    let count = |k: BasisKind| idx.iter().filter(|b| b.kind == k).count();
    let (ns, nz, nd) = (count(BasisKind::S), count(BasisKind::Z), count(BasisKind::D));
    let planes: Vec<usize> = idx.iter().filter_map(|b| b.plane()).collect();
    let same_plane = planes.len() == 2 && planes[0] == planes[1];
    match (ns, nz, nd) {
        (1, 0, 2) if same_plane => Some(1),
        (0, 1, 2) if same_plane => Some(2),
        (0, 0, 3) => Some(3),
        (1, 0, 2) => Some(4),
        (0, 1, 2) => Some(5),
        (1, 1, 1) => Some(6),
        (2, 0, 1) => Some(7),
        (0, 2, 1) => Some(8),
        _ => None,
    }
}

/// Projection of a trivector onto module `module` (1..=8).
pub fn module_component<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    t: &Multivector<S>,
    module: u8,
) -> Multivector<S> {
    t.filter(|b| module_of(g, b.indices()) == Some(module))
}
