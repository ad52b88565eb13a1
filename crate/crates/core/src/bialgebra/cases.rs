//! Necessary conditions on bialgebra cocycles of nondegenerate algebras, per
//! plane `j`.
//!
//! Write `ξ = ad r0 + R`; unsuperscripted `c_ij, e_ij, g_ij, h_ij` are
//! coefficients of `r0`, superscripted ones are coefficients of `ξ`.
//!
//! Case I applies when `j > k0`, or when `(n_jj^k)_k ≠ 0` or
//! `(n_jj^((l)))_l ≠ 0`. One of these must hold:
//! 1. `e_ij^(2j-1) = 0` for all `i`, and `g_ij^(2j-1) = h_ij^(2j-1) = 0` for all `i`;
//! 2. `e_ij^(2j-1) = 0` and `c_ij = e_ij = 0` for all `i`;
//! 3. `c_ij = e_ij = 0` and `g_ij = h_ij = 0` for all `i`.
//!
//! Case II applies when `j ≤ k0`, both `n_jj` families vanish, and
//! `c_pj^(2j-1) ≠ 0` for some `p`. One of these must hold:
//! 1. `c_ij = e_ij = g_ij = h_ij = 0` for all `i`;
//! 2. `e_ij^(2j-1) = 0` for all `i`, and there are `a, b` with
//!    `c_pj = a c_pj^(2j-1)`, `e_pj = b c_pj^(2j-1)` for every `p` over `𝔰`, and
//!    `g_pj = -a g_pj^(2j-1) + b h_pj^(2j-1)`, `h_pj = b g_pj^(2j-1) + a h_pj^(2j-1)`
//!    for every `p` over `𝔷`.

use serde::Serialize;

use crate::cohomology::{BivectorCoefficients, CoefficientView, Cochain, Decomposer, Target};
use crate::error::{Error, Result};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    CaseI,
    CaseII,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneCase {
    pub j: usize,
    pub case: CaseKind,
    /// Alternatives (1-based) whose conditions hold.
    pub matched: Vec<u8>,
    /// `(a, b)` recovered for case II alternative 2.
    pub ab: Option<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub planes: Vec<PlaneCase>,
}

impl CaseReport {
    /// Planes where the applicable case has no matching alternative.
    pub fn findings(&self) -> impl Iterator<Item = &PlaneCase> {
        self.planes
            .iter()
            .filter(|p| p.case != CaseKind::NotApplicable && p.matched.is_empty())
    }

    pub fn passed(&self) -> bool {
        self.findings().next().is_none()
    }
}

pub fn case_filter<S: Scalar>(g: &FlatLieAlgebra<S>, xi: &Cochain<S>) -> Result<CaseReport> {
    if !g.classify().nondegenerate {
        return Err(Error::Degenerate {
            operation: "the case filter",
        });
    }
    case_filter_with(g, &Decomposer::new(g), xi)
}

pub fn case_filter_with<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    decomposer: &Decomposer<'_, S>,
    xi: &Cochain<S>,
) -> Result<CaseReport> {
    let dec = decomposer.decompose(xi)?;
    let r0 = BivectorCoefficients::new(g, &dec.r0);
    let view = CoefficientView::new(g, xi);
    let (k0, l0) = (g.k0(), g.l0());
    let zero = |x: S| x.is_negligible();
    let mut planes = Vec::new();
    for j in 1..=g.m() {
        let sup = view.at(Target::D(2 * j - 1));
        let n_s = (1..=k0).any(|k| !zero(view.at(Target::S(k)).n(j, j)));
        let n_z = (1..=l0).any(|l| !zero(view.at(Target::Z(l)).n(j, j)));
        let e_sup_zero = (1..=k0).all(|i| zero(sup.e(i, j)));
        let gh_sup_zero = (1..=l0).all(|i| zero(sup.g(i, j)) && zero(sup.h(i, j)));
        let ce_zero = (1..=k0).all(|i| zero(r0.c(i, j)) && zero(r0.e(i, j)));
        let gh_zero = (1..=l0).all(|i| zero(r0.g(i, j)) && zero(r0.h(i, j)));
        let pivot = (1..=k0).find(|&p| !zero(sup.c(p, j)));

        let mut matched = Vec::new();
        let mut ab = None;
        let case = if j > k0 || n_s || n_z {
            if e_sup_zero && gh_sup_zero {
                matched.push(1);
            }
            if e_sup_zero && ce_zero {
                matched.push(2);
            }
            if ce_zero && gh_zero {
                matched.push(3);
            }
            CaseKind::CaseI
        } else if let Some(p0) = pivot {
            if ce_zero && gh_zero {
                matched.push(1);
            }
            let base = sup.c(p0, j);
            let a = r0.c(p0, j) / base.clone();
            let b = r0.e(p0, j) / base;
            let s_ok = (1..=k0).all(|p| {
                zero(r0.c(p, j) - a.clone() * sup.c(p, j)) && zero(r0.e(p, j) - b.clone() * sup.c(p, j))
            });
            let z_ok = (1..=l0).all(|p| {
                zero(r0.g(p, j) + a.clone() * sup.g(p, j) - b.clone() * sup.h(p, j))
                    && zero(r0.h(p, j) - b.clone() * sup.g(p, j) - a.clone() * sup.h(p, j))
            });
            if e_sup_zero && s_ok && z_ok {
                matched.push(2);
                ab = Some((a.to_string(), b.to_string()));
            }
            CaseKind::CaseII
        } else {
            CaseKind::NotApplicable
        };
        planes.push(PlaneCase {
            j,
            case,
            matched,
            ab,
        });
    }
    Ok(CaseReport { planes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exteralg::Multivector;
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
    fn dim3_examples() {
        let g = FlatLieAlgebra::<Rational>::from_ints(1, 0, &[&[1]]).unwrap();
        let rep = case_filter(&g, &dim3_cocycle(0, 0, 1, 0)).unwrap();
        assert_eq!(rep.planes[0].case, CaseKind::CaseI);
        assert!(rep.planes[0].matched.contains(&2) && rep.planes[0].matched.contains(&3));
        let rep = case_filter(&g, &dim3_cocycle(1, 1, 0, 1)).unwrap();
        assert_eq!(rep.planes[0].case, CaseKind::CaseII);
        assert_eq!(rep.planes[0].matched, vec![2]);
        assert_eq!(rep.planes[0].ab, Some(("1".into(), "-1".into())));
        let rep = case_filter(&g, &Cochain::zero(3)).unwrap();
        assert_eq!(rep.planes[0].case, CaseKind::NotApplicable);
        assert!(rep.passed());
    }
}
