use serde::Serialize;

use crate::bialgebra::schouten::schouten;
use crate::cohomology::invariants;
use crate::exteralg::{Multivector, SubspaceBasis, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CybeClass {
    /// `[r,r] = 0`.
    Triangular,
    /// `[r,r] ≠ 0` and `ad`-invariant.
    InvariantNonzero,
    Generic,
}

impl CybeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CybeClass::Triangular => "triangular",
            CybeClass::InvariantNonzero => "invariant_nonzero",
            CybeClass::Generic => "generic",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CybeVerdict<S> {
    pub bracket_square: Multivector<S>,
    pub class: CybeClass,
}

/// Classifier holding `(∧³g)^g` for repeated use.
#[derive(Clone, Debug)]
pub struct CybeClassifier<'a, S> {
    g: &'a FlatLieAlgebra<S>,
    basis: WedgeBasis,
    inv3: SubspaceBasis<S>,
}

impl<'a, S: Scalar> CybeClassifier<'a, S> {
    pub fn new(g: &'a FlatLieAlgebra<S>) -> Self {
        CybeClassifier {
            g,
            basis: WedgeBasis::new(g.dim(), 3),
            inv3: invariants(g, 3).expect("degree 3 is supported"),
        }
    }

    pub fn invariants(&self) -> &SubspaceBasis<S> {
        &self.inv3
    }

    pub fn classify(&self, r: &Multivector<S>) -> CybeVerdict<S> {
        let sq = schouten(self.g, r, r);
        let class = if sq.is_zero() {
            CybeClass::Triangular
        } else if self.inv3.contains(&sq.to_dense(&self.basis)) {
            CybeClass::InvariantNonzero
        } else {
            CybeClass::Generic
        };
        CybeVerdict {
            bracket_square: sq,
            class,
        }
    }
}

pub fn cybe_classify<S: Scalar>(g: &FlatLieAlgebra<S>, r: &Multivector<S>) -> CybeVerdict<S> {
    CybeClassifier::new(g).classify(r)
}
