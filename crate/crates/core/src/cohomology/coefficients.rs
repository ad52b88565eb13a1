//! Named coefficients of bivectors and cochains.
//!
//! For a bivector `r` the families are (all indices 1-based):
//!
//! | name      | basis bivector        |
//! |-----------|-----------------------|
//! | `a_ij`    | `s_i ∧ s_j`           |
//! | `b_ij`    | `s_i ∧ z_j`           |
//! | `c_ij`    | `s_i ∧ d_{2j-1}`      |
//! | `e_ij`    | `s_i ∧ d_{2j}`        |
//! | `f_ij`    | `z_i ∧ z_j`           |
//! | `g_ij`    | `z_i ∧ d_{2j-1}`      |
//! | `h_ij`    | `z_i ∧ d_{2j}`        |
//! | `m_ij`    | `d_{2i-1} ∧ d_{2j-1}` |
//! | `n_ij`    | `d_{2i-1} ∧ d_{2j}`   |
//! | `p_ij`    | `d_{2i} ∧ d_{2j}`     |
//!
//! Out-of-order indices are read with the antisymmetry sign, so `a_ji = -a_ij`.
//! A cochain's coefficients carry a target: `c_ij^k` is `c_ij` of `ξ(s_k)`,
//! `c_ij^((k))` of `ξ(z_k)` and `c_ij^(q)` of `ξ(d_q)`.

use crate::cohomology::cochain::Cochain;
use crate::exteralg::Multivector;
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// Coefficient accessors over one bivector.
#[derive(Clone, Copy, Debug)]
pub struct BivectorCoefficients<'a, S> {
    alg: &'a FlatLieAlgebra<S>,
    r: &'a Multivector<S>,
}

impl<'a, S: Scalar> BivectorCoefficients<'a, S> {
    pub fn new(alg: &'a FlatLieAlgebra<S>, r: &'a Multivector<S>) -> Self {
        BivectorCoefficients { alg, r }
    }

    fn at(&self, x: usize, y: usize) -> S {
        self.r.coeff(&[x, y])
    }

    pub fn a(&self, i: usize, j: usize) -> S {
        self.at(self.alg.s(i), self.alg.s(j))
    }

    pub fn b(&self, i: usize, j: usize) -> S {
        self.at(self.alg.s(i), self.alg.z(j))
    }

    pub fn c(&self, i: usize, j: usize) -> S {
        self.at(self.alg.s(i), self.alg.d(2 * j - 1))
    }

    pub fn e(&self, i: usize, j: usize) -> S {
        self.at(self.alg.s(i), self.alg.d(2 * j))
    }

    pub fn f(&self, i: usize, j: usize) -> S {
        self.at(self.alg.z(i), self.alg.z(j))
    }

    pub fn g(&self, i: usize, j: usize) -> S {
        self.at(self.alg.z(i), self.alg.d(2 * j - 1))
    }

    pub fn h(&self, i: usize, j: usize) -> S {
        self.at(self.alg.z(i), self.alg.d(2 * j))
    }

    pub fn m(&self, i: usize, j: usize) -> S {
        self.at(self.alg.d(2 * i - 1), self.alg.d(2 * j - 1))
    }

    pub fn n(&self, i: usize, j: usize) -> S {
        self.at(self.alg.d(2 * i - 1), self.alg.d(2 * j))
    }

    pub fn p(&self, i: usize, j: usize) -> S {
        self.at(self.alg.d(2 * i), self.alg.d(2 * j))
    }
}

/// Which basis vector a cochain coefficient refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `ξ(s_k)`, written with superscript `k`.
    S(usize),
    /// `ξ(z_k)`, written with superscript `((k))`.
    Z(usize),
    /// `ξ(d_q)`, written with superscript `(q)`.
    D(usize),
}

/// Coefficient accessors over a cochain.
#[derive(Clone, Copy, Debug)]
pub struct CoefficientView<'a, S> {
    alg: &'a FlatLieAlgebra<S>,
    xi: &'a Cochain<S>,
}

impl<'a, S: Scalar> CoefficientView<'a, S> {
    pub fn new(alg: &'a FlatLieAlgebra<S>, xi: &'a Cochain<S>) -> Self {
        CoefficientView { alg, xi }
    }

    pub fn algebra(&self) -> &'a FlatLieAlgebra<S> {
        self.alg
    }

    /// The coefficients of `ξ(target)`.
    pub fn at(&self, target: Target) -> BivectorCoefficients<'a, S> {
        let x = match target {
            Target::S(k) => self.alg.s(k),
            Target::Z(k) => self.alg.z(k),
            Target::D(q) => self.alg.d(q),
        };
        BivectorCoefficients::new(self.alg, self.xi.value(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn accessors_match_coordinates() {
        let g = FlatLieAlgebra::<Rational>::from_ints(1, 1, &[&[1]]).unwrap();
        let n = g.dim();
        let mut r = Multivector::zero(n, 2);
        r.add_wedge(&[g.s(1), g.d(1)], Rational::from_i64(3));
        r.add_wedge(&[g.d(2), g.z(1)], Rational::from_i64(5));
        r.add_wedge(&[g.d(1), g.d(2)], Rational::from_i64(7));
        let v = BivectorCoefficients::new(&g, &r);
        assert_eq!(v.c(1, 1), Rational::from_i64(3));
        assert_eq!(v.h(1, 1), Rational::from_i64(-5));
        assert_eq!(v.n(1, 1), Rational::from_i64(7));
        assert_eq!(v.e(1, 1), Rational::from_i64(0));
        let mut xi = Cochain::zero(n);
        xi.set(g.z(1), r.clone());
        let view = CoefficientView::new(&g, &xi);
        assert_eq!(view.at(Target::Z(1)).c(1, 1), Rational::from_i64(3));
        assert_eq!(view.at(Target::D(2)).c(1, 1), Rational::from_i64(0));
    }
}
