use itertools::Itertools;

use crate::cohomology::coefficients::{BivectorCoefficients, CoefficientView, Target};
use crate::cohomology::cochain::{coboundary, Cochain};
use crate::cohomology::spaces::invariants;
use crate::error::{Error, Result};
use crate::exteralg::{dot, Matrix, Multivector, SubspaceBasis, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// `ξ = ad r0 + R` with `R(𝔰 ⊕ 𝔷)` invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<S> {
    pub r0: Multivector<S>,
    pub r: Cochain<S>,
    /// `Φ_ℓ` for `ℓ = 1..=m` (index `ℓ - 1`).
    pub phi: Vec<Multivector<S>>,
}

/// Outcome of re-checking a decomposition against its defining properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCheck {
    /// `ξ = coboundary(r0) + R` exactly.
    pub sum: bool,
    /// `R(s_k)` and `R(z_k)` are invariant bivectors.
    pub invariant_on_abelian_part: bool,
    /// `ξ(d_{2ℓ-1}) = R(d_{2ℓ-1}) + Φ_ℓ ∧ d_{2ℓ}` and
    /// `ξ(d_{2ℓ}) = R(d_{2ℓ}) + d_{2ℓ-1} ∧ Φ_ℓ`.
    pub phi: bool,
    /// `r0 ∈ 𝔰∧[g,g] ⊕ 𝔷∧[g,g] ⊕ ⊕_{i<j} P_i∧P_j`.
    pub r0_in_complement: bool,
}

impl DecompositionCheck {
    pub fn passed(&self) -> bool {
        self.sum && self.invariant_on_abelian_part && self.phi && self.r0_in_complement
    }
}

/// `true` for the basis bivectors `r0` may use: `s∧d`, `z∧d`, and `d∧d'`
/// from different planes.
pub fn in_complement<S: Scalar>(g: &FlatLieAlgebra<S>, x: usize, y: usize) -> bool {
    let (bx, by) = (g.basis_index(x), g.basis_index(y));
    match (bx.plane(), by.plane()) {
        (None, Some(_)) | (Some(_), None) => true,
        (Some(p), Some(q)) => p != q,
        (None, None) => false,
    }
}

/// `Φ_ℓ = Σ_j (Σ_i λ_iℓ c_ij) d_{2j-1} + Σ_j (Σ_i λ_iℓ e_ij) d_{2j}` with
/// `c, e` read from `r0`.
pub fn phi<S: Scalar>(g: &FlatLieAlgebra<S>, r0: &Multivector<S>, ell: usize) -> Multivector<S> {
    let v = BivectorCoefficients::new(g, r0);
    let mut out = Multivector::zero(g.dim(), 1);
    for j in 1..=g.m() {
        let (mut c, mut e) = (S::zero(), S::zero());
        for i in 1..=g.k0() {
            c = c + g.lam(i, ell).clone() * v.c(i, j);
            e = e + g.lam(i, ell).clone() * v.e(i, j);
        }
        out.add_wedge(&[g.d(2 * j - 1)], c);
        out.add_wedge(&[g.d(2 * j)], e);
    }
    out
}

/// Solver for the canonical `r0` of an algebra; reuses the invariant space and
/// the linear system across cochains.
#[derive(Clone, Debug)]
pub struct Decomposer<'a, S> {
    g: &'a FlatLieAlgebra<S>,
    basis: WedgeBasis,
    inv: SubspaceBasis<S>,
    annihilator: Vec<Vec<S>>,
    complement: Vec<usize>,
    system: Matrix<S>,
}

impl<'a, S: Scalar> Decomposer<'a, S> {
    pub fn new(g: &'a FlatLieAlgebra<S>) -> Self {
        let inv = invariants(g, 2).expect("degree 2 is supported");
        Self::with_invariants(g, inv)
    }

    /// Build from a precomputed `(∧²g)^g`.
    pub fn with_invariants(g: &'a FlatLieAlgebra<S>, inv: SubspaceBasis<S>) -> Self {
        let n = g.dim();
        let basis = WedgeBasis::new(n, 2);
        let annihilator = inv.annihilator().vectors().to_vec();
        let complement: Vec<usize> = basis
            .blades()
            .iter()
            .enumerate()
            .filter(|(_, b)| in_complement(g, b.indices()[0], b.indices()[1]))
            .map(|(k, _)| k)
            .collect();
        let mut system = Matrix::zeros(0, complement.len());
        for x in abelian_part(g) {
            let images: Vec<Vec<S>> = complement
                .iter()
                .map(|&k| {
                    let e = Multivector::term(n, basis.blade(k).indices(), S::one());
                    g.ad_basis(x, &e).to_dense(&basis)
                })
                .collect();
            for q in &annihilator {
                system.push_row(images.iter().map(|col| dot(q, col)).collect());
            }
        }
        Decomposer {
            g,
            basis,
            inv,
            annihilator,
            complement,
            system,
        }
    }

    pub fn invariants(&self) -> &SubspaceBasis<S> {
        &self.inv
    }

    /// Decompose a cocycle. `r0` is the particular solution with every free
    /// variable of the reduced system set to zero.
    pub fn decompose(&self, xi: &Cochain<S>) -> Result<Decomposition<S>> {
        let g = self.g;
        if xi.dim() != g.dim() {
            return Err(Error::DimensionMismatch {
                left: g.dim(),
                right: xi.dim(),
            });
        }
        xi.check_cocycle(g)?;
        let mut rhs = Vec::with_capacity(self.system.rows());
        for x in abelian_part(g) {
            let v = xi.value(x).to_dense(&self.basis);
            rhs.extend(self.annihilator.iter().map(|q| dot(q, &v)));
        }
        let coords = self
            .system
            .solve(&rhs)
            .ok_or_else(|| Error::Decomposition("no r0 makes R(s), R(z) invariant".into()))?;
        let mut r0 = Multivector::zero(g.dim(), 2);
        for (&k, c) in self.complement.iter().zip(coords) {
            r0.add_term(self.basis.blade(k).clone(), c);
        }
        let r = xi - &coboundary(g, &r0);
        for x in abelian_part(g) {
            if !self.inv.contains(&r.value(x).to_dense(&self.basis)) {
                return Err(Error::Decomposition(format!(
                    "R({}) is not invariant",
                    g.basis_name(x)
                )));
            }
        }
        let phi = (1..=g.m()).map(|ell| phi(g, &r0, ell)).collect();
        Ok(Decomposition { r0, r, phi })
    }

    /// Re-check every defining property of `dec` against `xi`.
    pub fn verify(&self, xi: &Cochain<S>, dec: &Decomposition<S>) -> DecompositionCheck {
        let g = self.g;
        let sum = &coboundary(g, &dec.r0) + &dec.r == *xi;
        let invariant_on_abelian_part = abelian_part(g)
            .all(|x| self.inv.contains(&dec.r.value(x).to_dense(&self.basis)));
        let phi_ok = (1..=g.m()).all(|ell| {
            let f = phi(g, &dec.r0, ell);
            let (d1, d2) = (g.basis_vector(g.d(2 * ell - 1)), g.basis_vector(g.d(2 * ell)));
            f == dec.phi[ell - 1]
                && *xi.value(g.d(2 * ell - 1)) == dec.r.value(g.d(2 * ell - 1)) + &f.wedge_unchecked(&d2)
                && *xi.value(g.d(2 * ell)) == dec.r.value(g.d(2 * ell)) + &d1.wedge_unchecked(&f)
        });
        let r0_in_complement = dec
            .r0
            .terms()
            .all(|(b, _)| in_complement(g, b.indices()[0], b.indices()[1]));
        DecompositionCheck {
            sum,
            invariant_on_abelian_part,
            phi: phi_ok,
            r0_in_complement,
        }
    }
}

/// Decompose with a one-off [`Decomposer`].
pub fn decompose<S: Scalar>(g: &FlatLieAlgebra<S>, xi: &Cochain<S>) -> Result<Decomposition<S>> {
    Decomposer::new(g).decompose(xi)
}

fn abelian_part<S: Scalar>(g: &FlatLieAlgebra<S>) -> impl Iterator<Item = usize> {
    0..g.k0() + g.l0()
}

/// Violations of the structural relations every cocycle satisfies on
/// `ξ(s_k)`: `a_ij^k = b_ij^k = 0`, and each of `(c_ij^k)_k`, `(e_ij^k)_k`,
/// `(g_ij^k)_k`, `(h_ij^k)_k` is a multiple of the row `L_j`.
pub fn coefficient_relations<S: Scalar>(g: &FlatLieAlgebra<S>, xi: &Cochain<S>) -> Vec<String> {
    let view = CoefficientView::new(g, xi);
    let k0 = g.k0();
    let mut out = Vec::new();
    for k in 1..=k0 {
        let v = view.at(Target::S(k));
        for (i, j) in (1..=k0).tuple_combinations() {
            if !v.a(i, j).is_negligible() {
                out.push(format!("a_{i}{j}^{k} != 0"));
            }
        }
        for i in 1..=k0 {
            for j in 1..=g.l0() {
                if !v.b(i, j).is_negligible() {
                    out.push(format!("b_{i}{j}^{k} != 0"));
                }
            }
        }
    }
    type Family<'b, S> = (&'static str, usize, fn(&BivectorCoefficients<'b, S>, usize, usize) -> S);
    let families: [Family<'_, S>; 4] = [
        ("c", k0, BivectorCoefficients::c),
        ("e", k0, BivectorCoefficients::e),
        ("g", g.l0(), BivectorCoefficients::g),
        ("h", g.l0(), BivectorCoefficients::h),
    ];
    for (name, count, get) in families {
        for i in 1..=count {
            for j in 1..=g.m() {
                let v: Vec<S> = (1..=k0).map(|k| get(&view.at(Target::S(k)), i, j)).collect();
                let parallel = (1..=k0).tuple_combinations().all(|(k, l)| {
                    (v[k - 1].clone() * g.lam(l, j).clone() - v[l - 1].clone() * g.lam(k, j).clone())
                        .is_negligible()
                });
                if !parallel {
                    out.push(format!("({name}_{i}{j}^k)_k is not a multiple of L_{j}"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn dim3() -> FlatLieAlgebra<Rational> {
        FlatLieAlgebra::from_ints(1, 0, &[&[1]]).unwrap()
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
    fn invariant_part_only() {
        let g = dim3();
        let xi = dim3_cocycle(0, 0, 1, 0);
        let d = decompose(&g, &xi).unwrap();
        assert!(d.r0.is_zero());
        assert_eq!(d.r, xi);
    }

    #[test]
    fn coboundary_round_trip() {
        let g = dim3();
        let r = Multivector::term(3, &[0, 1], q(1));
        let d = decompose(&g, &coboundary(&g, &r)).unwrap();
        assert_eq!(d.r0, r);
        assert!(d.r.is_zero());
        let d = decompose(&g, &dim3_cocycle(1, 0, 0, 0)).unwrap();
        assert_eq!(d.r0, Multivector::term(3, &[0, 2], q(-1)));
        assert!(d.r.is_zero());
    }

    #[test]
    fn rejects_non_cocycle() {
        let g = dim3();
        let mut xi = Cochain::zero(3);
        xi.set(1, Multivector::term(3, &[0, 2], q(1)));
        assert!(matches!(decompose(&g, &xi), Err(Error::NotCocycle { .. })));
    }

    #[test]
    fn verify_flags_everything() {
        let g = dim3();
        let dec = Decomposer::new(&g);
        let xi = dim3_cocycle(1, 1, 1, 1);
        let d = dec.decompose(&xi).unwrap();
        assert!(dec.verify(&xi, &d).passed());
        assert!(coefficient_relations(&g, &xi).is_empty());
    }
}
