//! Dual brackets, the bialgebra test, the Schouten bracket and what is built on it.

mod cases;
mod closed_forms;
mod cybe;
mod dual;
mod exactness;
mod modules;
mod schouten;

pub use cases::{case_filter, case_filter_with, CaseKind, CaseReport, PlaneCase};
pub use closed_forms::{
    form_outcome, jacobiator_forms, pairing_table, FormComparison, FormOutcome, JacobiatorForm,
    PairingComparison,
};
pub use cybe::{cybe_classify, CybeClass, CybeClassifier, CybeVerdict};
pub use dual::{
    derived_series_dims, is_bialgebra, jacobi_violations, u_star, x_coef, y_coef, DualBracket,
    JacobiReport, JacobiViolation,
};
pub use exactness::{exactness, ExactnessSolver};
pub use modules::{module_component, module_of};
pub use schouten::{mu, schouten, schouten_oracle};
