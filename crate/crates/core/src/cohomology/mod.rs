//! 1-cocycles `g → ∧²g`, coboundaries, invariant multivectors, and the
//! decomposition `ξ = ad r0 + R`.

mod cochain;
mod coefficients;
mod decompose;
mod spaces;
mod tables;

pub use cochain::{coboundary, Cochain};
pub use coefficients::{BivectorCoefficients, CoefficientView, Target};
pub use decompose::{
    coefficient_relations, decompose, in_complement, phi, Decomposer, Decomposition,
    DecompositionCheck,
};
pub use spaces::{
    coboundary_space, cocycle_space, cocycle_space_dense, invariants, lemma_inv_closed_form,
};
pub use tables::{check_tables, TableCheck, TableReport};
