use crate::cohomology::{coboundary, Cochain, Decomposer};
use crate::error::{Error, Result};
use crate::exteralg::{Matrix, Multivector, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// Decides exactness of cocycles on a nondegenerate algebra: `ξ = ad r` iff
/// `R(𝔰 ⊕ 𝔷) = 0` and `R = ad r1` on `[g,g]` for some `r1 ∈ ∧²𝔰 ⊕ 𝔰∧𝔷`;
/// then `r = r0 + r1`.
#[derive(Clone, Debug)]
pub struct ExactnessSolver<'a, S> {
    g: &'a FlatLieAlgebra<S>,
    decomposer: Decomposer<'a, S>,
    basis: WedgeBasis,
    r1_blades: Vec<[usize; 2]>,
    system: Matrix<S>,
}

impl<'a, S: Scalar> ExactnessSolver<'a, S> {
    pub fn new(g: &'a FlatLieAlgebra<S>) -> Result<Self> {
        Self::with_decomposer(g, Decomposer::new(g))
    }

    pub fn with_decomposer(g: &'a FlatLieAlgebra<S>, decomposer: Decomposer<'a, S>) -> Result<Self> {
        if !g.classify().nondegenerate {
            return Err(Error::Degenerate {
                operation: "the exactness criterion",
            });
        }
        let n = g.dim();
        let basis = WedgeBasis::new(n, 2);
        let mut r1_blades = Vec::new();
        for i in 1..=g.k0() {
            for j in i + 1..=g.k0() {
                r1_blades.push([g.s(i), g.s(j)]);
            }
            for j in 1..=g.l0() {
                r1_blades.push([g.s(i), g.z(j)]);
            }
        }
        let mut system = Matrix::zeros(0, r1_blades.len());
        for q in 1..=2 * g.m() {
            let cols: Vec<Vec<S>> = r1_blades
                .iter()
                .map(|b| {
                    g.ad_basis(g.d(q), &Multivector::term(n, b, S::one()))
                        .to_dense(&basis)
                })
                .collect();
            for row in 0..basis.len() {
                system.push_row(cols.iter().map(|c| c[row].clone()).collect());
            }
        }
        Ok(ExactnessSolver {
            g,
            decomposer,
            basis,
            r1_blades,
            system,
        })
    }

    /// `Some(r)` with `coboundary(r) = ξ`, or `None` when `ξ` is not exact.
    pub fn solve(&self, xi: &Cochain<S>) -> Result<Option<Multivector<S>>> {
        let g = self.g;
        let dec = self.decomposer.decompose(xi)?;
        if (0..g.k0() + g.l0()).any(|x| !dec.r.value(x).is_zero()) {
            return Ok(None);
        }
        let rhs: Vec<S> = (1..=2 * g.m())
            .flat_map(|q| dec.r.value(g.d(q)).to_dense(&self.basis))
            .collect();
        let Some(coords) = self.system.solve(&rhs) else {
            return Ok(None);
        };
        let mut r = dec.r0;
        for (b, c) in self.r1_blades.iter().zip(coords) {
            r.add_wedge(b, c);
        }
        if coboundary(g, &r) != *xi {
            return Err(Error::Decomposition(
                "criterion satisfied but ad(r0 + r1) differs from the input".into(),
            ));
        }
        Ok(Some(r))
    }
}

pub fn exactness<S: Scalar>(g: &FlatLieAlgebra<S>, xi: &Cochain<S>) -> Result<Option<Multivector<S>>> {
    ExactnessSolver::new(g)?.solve(xi)
}
