use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{BivectorCoefficients, Cochain};
use crate::exteralg::Multivector;
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// The bracket on `g*` transposed from a cochain:
/// `⟨[α, β], x⟩ = ⟨α ∧ β, ξ(x)⟩`.
///
/// Dual vectors are [`Multivector`]s of degree 1 whose index `i` refers to the
/// dual basis vector `e_i*`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBracket<S> {
    table: Vec<Vec<Multivector<S>>>,
}

impl<S: Scalar> DualBracket<S> {
    pub fn new(xi: &Cochain<S>) -> Self {
        let n = xi.dim();
        let mut table = vec![vec![Multivector::zero(n, 1); n]; n];
        for (x, value) in xi.values().iter().enumerate() {
            for (blade, c) in value.terms() {
                let (a, b) = (blade.indices()[0], blade.indices()[1]);
                table[a][b].add_wedge(&[x], c.clone());
                table[b][a].add_wedge(&[x], -c.clone());
            }
        }
        DualBracket { table }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// `[e_a*, e_b*]`.
    pub fn basis(&self, a: usize, b: usize) -> &Multivector<S> {
        &self.table[a][b]
    }

    pub fn bracket(&self, u: &Multivector<S>, v: &Multivector<S>) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim(), 1);
        for (bu, cu) in u.terms() {
            for (bv, cv) in v.terms() {
                let t = &self.table[bu.indices()[0]][bv.indices()[0]];
                if !t.is_zero() {
                    out.axpy(&(cu.clone() * cv.clone()), t);
                }
            }
        }
        out
    }

    /// `J(α,β,γ) = [α,[β,γ]] + [β,[γ,α]] + [γ,[α,β]]` on dual basis vectors.
    pub fn jacobiator(&self, a: usize, b: usize, c: usize) -> Multivector<S> {
        let n = self.dim();
        let (ea, eb, ec) = (
            Multivector::basis(n, a),
            Multivector::basis(n, b),
            Multivector::basis(n, c),
        );
        let mut out = self.bracket(&ea, &self.table[b][c]);
        out += &self.bracket(&eb, &self.table[c][a]);
        out += &self.bracket(&ec, &self.table[a][b]);
        out
    }
}

/// `u_k* = Σ_i λ_ik s_i*`.
pub fn u_star<S: Scalar>(g: &FlatLieAlgebra<S>, k: usize) -> Multivector<S> {
    let mut out = Multivector::zero(g.dim(), 1);
    for i in 1..=g.k0() {
        out.add_wedge(&[g.s(i)], g.lam(i, k).clone());
    }
    out
}

/// `X_ij = Σ_p λ_pi c_pj` with `c` read from `r0`.
pub fn x_coef<S: Scalar>(g: &FlatLieAlgebra<S>, r0: &Multivector<S>, i: usize, j: usize) -> S {
    let v = BivectorCoefficients::new(g, r0);
    (1..=g.k0()).fold(S::zero(), |acc, p| acc + g.lam(p, i).clone() * v.c(p, j))
}

/// `Y_ij = Σ_p λ_pi e_pj` with `e` read from `r0`.
pub fn y_coef<S: Scalar>(g: &FlatLieAlgebra<S>, r0: &Multivector<S>, i: usize, j: usize) -> S {
    let v = BivectorCoefficients::new(g, r0);
    (1..=g.k0()).fold(S::zero(), |acc, p| acc + g.lam(p, i).clone() * v.e(p, j))
}

/// A dual triple with nonzero Jacobiator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    /// Nonzero coordinates of the Jacobiator on the dual basis.
    pub value: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JacobiReport {
    /// Whether the input passed the cocycle gate.
    pub cocycle: bool,
    /// First residual pair when the gate failed.
    pub cocycle_witness: Option<(usize, usize)>,
    /// Every triple `a < b < c` of dual basis vectors with nonzero
    /// Jacobiator (the Jacobiator is alternating, so these cover all triples).
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.cocycle && self.violations.is_empty()
    }
}

/// Decide whether `(g, ξ)` is a Lie bialgebra.
pub fn is_bialgebra<S: Scalar>(g: &FlatLieAlgebra<S>, xi: &Cochain<S>) -> JacobiReport {
    if let Some(((x, y), _)) = xi.first_violation(g) {
        return JacobiReport {
            cocycle: false,
            cocycle_witness: Some((x, y)),
            violations: Vec::new(),
        };
    }
    JacobiReport {
        cocycle: true,
        cocycle_witness: None,
        violations: jacobi_violations(&DualBracket::new(xi)),
    }
}

/// All triples `a < b < c` with nonzero Jacobiator, in lexicographic order.
pub fn jacobi_violations<S: Scalar>(db: &DualBracket<S>) -> Vec<JacobiViolation> {
    let triples: Vec<(usize, usize, usize)> = (0..db.dim()).tuple_combinations().collect();
    triples
        .par_iter()
        .filter_map(|&(a, b, c)| {
            let j = db.jacobiator(a, b, c);
            (!j.is_zero()).then(|| JacobiViolation {
                triple: (a, b, c),
                value: j
                    .terms()
                    .map(|(bl, v)| (bl.indices()[0], v.to_string()))
                    .collect(),
            })
        })
        .collect()
}

/// First derived-series terms of a bracket: returns the dimensions of
/// `𝔥, [𝔥,𝔥], [[𝔥,𝔥],[𝔥,𝔥]], …` until they stabilize.
pub fn derived_series_dims<S: Scalar>(db: &DualBracket<S>) -> Vec<usize> {
    use crate::exteralg::SubspaceBasis;
    let n = db.dim();
    let mut current = SubspaceBasis::from_vectors(
        n,
        (0..n)
            .map(|i| {
                let mut v = vec![S::zero(); n];
                v[i] = S::one();
                v
            })
            .collect(),
    );
    let mut dims = vec![current.dim()];
    loop {
        let vs: Vec<Multivector<S>> = current
            .vectors()
            .iter()
            .map(|v| {
                let mut m = Multivector::zero(n, 1);
                for (i, c) in v.iter().enumerate() {
                    m.add_wedge(&[i], c.clone());
                }
                m
            })
            .collect();
        let brackets = vs
            .iter()
            .tuple_combinations()
            .map(|(a, b)| {
                let mut out = vec![S::zero(); n];
                for (bl, c) in db.bracket(a, b).terms() {
                    out[bl.indices()[0]] = c.clone();
                }
                out
            })
            .collect();
        let next = SubspaceBasis::from_vectors(n, brackets);
        if next.dim() == current.dim() {
            return dims;
        }
        dims.push(next.dim());
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn dim3_cocycle(a: i64, b: i64, c: i64, e: i64) -> Cochain<Rational> {
        let bv = |terms: &[(usize, usize, i64)]| {
            let mut out = Multivector::zero(3, 2);
            for &(i, j, x) in terms {
                out.add_wedge(&[i, j], q(x));
            }
            out
        };
        Cochain::from_values(vec![
            bv(&[(0, 1, a), (0, 2, b), (1, 2, c)]),
            bv(&[(0, 1, e), (1, 2, b)]),
            bv(&[(0, 2, e), (1, 2, -a)]),
        ])
        .unwrap()
    }

    #[test]
    fn transpose_brackets_dim3() {
        let (a, b, c, e) = (2, 3, 5, 7);
        let db = DualBracket::new(&dim3_cocycle(a, b, c, e));
        let mut d12 = Multivector::zero(3, 1);
        d12.add_wedge(&[0], q(c));
        d12.add_wedge(&[1], q(b));
        d12.add_wedge(&[2], q(-a));
        assert_eq!(db.basis(1, 2), &d12);
        let mut sd1 = Multivector::zero(3, 1);
        sd1.add_wedge(&[0], q(a));
        sd1.add_wedge(&[1], q(e));
        assert_eq!(db.basis(0, 1), &sd1);
        assert!(DualBracket::new(&Cochain::<Rational>::zero(3))
            .basis(0, 2)
            .is_zero());
    }

    #[test]
    fn jacobiator_witness() {
        let db = DualBracket::new(&dim3_cocycle(0, 0, 1, 1));
        assert_eq!(db.jacobiator(0, 1, 2), Multivector::term(3, &[0], q(-2)));
        let db = DualBracket::new(&dim3_cocycle(1, 1, 1, 0));
        assert!(db.jacobiator(0, 1, 2).is_zero());
    }

    #[test]
    fn bialgebra_examples() {
        let g = FlatLieAlgebra::<Rational>::from_ints(1, 0, &[&[1]]).unwrap();
        assert!(is_bialgebra(&g, &dim3_cocycle(1, 1, 0, 1)).passed());
        let rep = is_bialgebra(&g, &dim3_cocycle(0, 0, 1, 1));
        assert!(!rep.passed());
        assert_eq!(rep.violations[0].triple, (0, 1, 2));
        let mut bad = Cochain::zero(3);
        bad.set(1, Multivector::term(3, &[0, 2], q(1)));
        let rep = is_bialgebra(&g, &bad);
        assert!(!rep.cocycle);
        assert_eq!(rep.cocycle_witness, Some((0, 1)));
    }
}
