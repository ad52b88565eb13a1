use std::ops::{Add, Sub};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exteralg::{Multivector, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// A linear map `g → ∧²g`, stored as its values on the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<S> {
    values: Vec<Multivector<S>>,
}

impl<S: Scalar> Cochain<S> {
    pub fn zero(dim: usize) -> Self {
        Cochain {
            values: vec![Multivector::zero(dim, 2); dim],
        }
    }

    /// Build from the images of the basis vectors, in basis order.
    pub fn from_values(values: Vec<Multivector<S>>) -> Result<Self> {
        let n = values.len();
        for v in &values {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: v.dim(),
                });
            }
            if v.degree() != 2 {
                return Err(Error::UnsupportedDegree { degree: v.degree() });
            }
        }
        Ok(Cochain { values })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `ξ(e_x)`.
    pub fn value(&self, x: usize) -> &Multivector<S> {
        &self.values[x]
    }

    pub fn values(&self) -> &[Multivector<S>] {
        &self.values
    }

    pub fn set(&mut self, x: usize, value: Multivector<S>) {
        assert_eq!(value.dim(), self.dim());
        assert_eq!(value.degree(), 2);
        self.values[x] = value;
    }

    /// `ξ(v)` for an arbitrary vector.
    pub fn apply(&self, v: &Multivector<S>) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim(), 2);
        for (b, c) in v.terms() {
            out.axpy(c, &self.values[b.indices()[0]]);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Multivector::is_zero)
    }

    pub fn scale(&self, factor: &S) -> Self {
        Cochain {
            values: self.values.iter().map(|v| v.scale(factor)).collect(),
        }
    }

    pub fn axpy(&mut self, factor: &S, other: &Self) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            a.axpy(factor, b);
        }
    }

    /// Coordinates in the flat cochain layout: index `x · C(n,2) + pair`, with
    /// pairs in canonical wedge order.
    pub fn to_flat(&self) -> Vec<S> {
        let basis = WedgeBasis::new(self.dim(), 2);
        self.values.iter().flat_map(|v| v.to_dense(&basis)).collect()
    }

    pub fn from_flat(dim: usize, coords: &[S]) -> Self {
        let basis = WedgeBasis::new(dim, 2);
        assert_eq!(coords.len(), dim * basis.len());
        Cochain {
            values: coords
                .chunks(basis.len())
                .map(|chunk| Multivector::from_dense(&basis, chunk))
                .collect(),
        }
    }

    /// `ξ([x,y]) − ad_x ξ(y) + ad_y ξ(x)` for every basis pair `x < y`.
    pub fn residual(&self, g: &FlatLieAlgebra<S>) -> Vec<((usize, usize), Multivector<S>)> {
        (0..self.dim())
            .tuple_combinations()
            .map(|(x, y)| ((x, y), self.residual_at(g, x, y)))
            .collect()
    }

    pub fn residual_at(&self, g: &FlatLieAlgebra<S>, x: usize, y: usize) -> Multivector<S> {
        let mut out = self.apply(g.bracket_basis(x, y));
        out -= &g.ad_basis(x, &self.values[y]);
        out += &g.ad_basis(y, &self.values[x]);
        out
    }

    /// First basis pair with nonzero residual.
    pub fn first_violation(&self, g: &FlatLieAlgebra<S>) -> Option<((usize, usize), Multivector<S>)> {
        (0..self.dim())
            .tuple_combinations()
            .map(|(x, y)| ((x, y), self.residual_at(g, x, y)))
            .find(|(_, r)| !r.is_zero())
    }

    pub fn is_cocycle(&self, g: &FlatLieAlgebra<S>) -> bool {
        self.first_violation(g).is_none()
    }

    /// `Ok` for cocycles, otherwise the first offending pair by name.
    pub fn check_cocycle(&self, g: &FlatLieAlgebra<S>) -> Result<()> {
        match self.first_violation(g) {
            None => Ok(()),
            Some(((x, y), _)) => Err(Error::NotCocycle {
                x: g.basis_name(x),
                y: g.basis_name(y),
            }),
        }
    }
}

/// The coboundary `x ↦ ad_x r`.
pub fn coboundary<S: Scalar>(g: &FlatLieAlgebra<S>, r: &Multivector<S>) -> Cochain<S> {
    Cochain {
        values: (0..g.dim()).map(|x| g.ad_basis(x, r)).collect(),
    }
}

impl<S: Scalar> Add<&Cochain<S>> for &Cochain<S> {
    type Output = Cochain<S>;

    fn add(self, rhs: &Cochain<S>) -> Cochain<S> {
        let mut out = self.clone();
        out.axpy(&S::one(), rhs);
        out
    }
}

impl<S: Scalar> Sub<&Cochain<S>> for &Cochain<S> {
    type Output = Cochain<S>;

    fn sub(self, rhs: &Cochain<S>) -> Cochain<S> {
        let mut out = self.clone();
        out.axpy(&-S::one(), rhs);
        out
    }
}
