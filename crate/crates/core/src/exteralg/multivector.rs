use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use arrayvec::ArrayVec;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::scalar::{signed, sort_with_sign, Scalar};

/// Highest exterior degree handled anywhere in the crate.
pub const MAX_DEGREE: usize = 4;

/// A strictly increasing tuple of basis indices labelling one basis element of
/// an exterior power. The derived ordering (lexicographic on equal lengths) is
/// the canonical wedge-basis order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(ArrayVec<usize, MAX_DEGREE>);

impl Blade {
    /// Normalizes an arbitrary index sequence. Returns the blade and whether the
    /// reordering was odd, or `None` if an index repeats.
    pub fn normalize(indices: &[usize]) -> Result<Option<(Blade, bool)>> {
        if indices.len() > MAX_DEGREE {
            return Err(Error::UnsupportedDegree {
                degree: indices.len(),
            });
        }
        let mut v: ArrayVec<usize, MAX_DEGREE> = indices.iter().copied().collect();
        Ok(sort_with_sign(&mut v).map(|odd| (Blade(v), odd)))
    }

    /// Build from indices that are already strictly increasing.
    pub fn from_sorted(indices: &[usize]) -> Blade {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Blade(indices.iter().copied().collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.contains(&index)
    }
}

/// The canonical basis of `∧^p` of an `n`-dimensional space.
#[derive(Clone, Debug)]
pub struct WedgeBasis {
    dim: usize,
    degree: usize,
    blades: Vec<Blade>,
    index: HashMap<Blade, usize>,
}

impl WedgeBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        let blades: Vec<Blade> = (0..dim)
            .combinations(degree)
            .map(|c| Blade::from_sorted(&c))
            .collect();
        let index = blades
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), i))
            .collect();
        WedgeBasis {
            dim,
            degree,
            blades,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.blades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blades.is_empty()
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn blade(&self, i: usize) -> &Blade {
        &self.blades[i]
    }

    pub fn position(&self, blade: &Blade) -> Option<usize> {
        self.index.get(blade).copied()
    }
}

/// A homogeneous element of `∧^p` over an `n`-dimensional space, stored
/// sparsely. Zero coefficients are never stored.
///
/// The same type carries exterior forms: a "form" is a multivector whose
/// indices refer to the dual basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<S> {
    dim: usize,
    degree: usize,
    coords: BTreeMap<Blade, S>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Multivector {
            dim,
            degree,
            coords: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, value: S) -> Self {
        let mut out = Self::zero(dim, 0);
        out.add_term(Blade::from_sorted(&[]), value);
        out
    }

    /// The basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        Self::term(dim, &[i], S::one())
    }

    /// `coeff · e_{i1} ∧ … ∧ e_{ip}` for any index order; repeated indices give zero.
    ///
    /// Panics if `indices.len() > MAX_DEGREE` or an index is out of range.
    pub fn term(dim: usize, indices: &[usize], coeff: S) -> Self {
        assert!(indices.iter().all(|&i| i < dim), "index out of range");
        let mut out = Self::zero(dim, indices.len());
        if let Some((blade, odd)) = Blade::normalize(indices).expect("degree within bounds") {
            out.add_term(blade, signed(coeff, odd));
        }
        out
    }

    /// Build from a dense coordinate vector over `basis`.
    pub fn from_dense(basis: &WedgeBasis, coords: &[S]) -> Self {
        assert_eq!(coords.len(), basis.len());
        let mut out = Self::zero(basis.dim(), basis.degree());
        for (blade, c) in basis.blades().iter().zip(coords) {
            out.add_term(blade.clone(), c.clone());
        }
        out
    }

    pub fn to_dense(&self, basis: &WedgeBasis) -> Vec<S> {
        debug_assert_eq!(basis.degree(), self.degree);
        let mut out = vec![S::zero(); basis.len()];
        for (blade, c) in &self.coords {
            let i = basis.position(blade).expect("blade belongs to basis");
            out[i] = c.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
        self.coords.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coords.len()
    }

    /// Coefficient of a canonical blade.
    pub fn get(&self, blade: &Blade) -> S {
        self.coords.get(blade).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of `e_{i1} ∧ … ∧ e_{ip}` in any index order, with the
    /// reordering sign applied.
    pub fn coeff(&self, indices: &[usize]) -> S {
        match Blade::normalize(indices) {
            Ok(Some((blade, odd))) => signed(self.get(&blade), odd),
            _ => S::zero(),
        }
    }

    /// Add `value` to the coefficient of a canonical blade.
    pub fn add_term(&mut self, blade: Blade, value: S) {
        debug_assert_eq!(blade.degree(), self.degree);
        if value.is_negligible() {
            return;
        }
        match self.coords.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + value;
                if sum.is_negligible() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Add `value · e_{indices}` for indices in any order.
    pub fn add_wedge(&mut self, indices: &[usize], value: S) {
        if let Ok(Some((blade, odd))) = Blade::normalize(indices) {
            self.add_term(blade, signed(value, odd));
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (b, c) in &self.coords {
            out.add_term(b.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// `self += factor · other`.
    pub fn axpy(&mut self, factor: &S, other: &Self) {
        debug_assert_eq!(self.dim, other.dim);
        debug_assert_eq!(self.degree, other.degree);
        for (b, c) in &other.coords {
            self.add_term(b.clone(), factor.clone() * c.clone());
        }
    }

    /// Wedge product. Fails when the result would exceed [`MAX_DEGREE`].
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let degree = self.degree + other.degree;
        if degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree { degree });
        }
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        let mut buf: ArrayVec<usize, MAX_DEGREE> = ArrayVec::new();
        for (a, ca) in &self.coords {
            for (b, cb) in &other.coords {
                if a.indices().iter().any(|i| b.contains(*i)) {
                    continue;
                }
                buf.clear();
                buf.extend(a.indices().iter().copied());
                buf.extend(b.indices().iter().copied());
                if let Some(odd) = sort_with_sign(&mut buf) {
                    out.add_term(Blade(buf.clone()), signed(ca.clone() * cb.clone(), odd));
                }
            }
        }
        out
    }

    /// Full pairing `⟨self, other⟩` between a form and a multivector of the same
    /// degree, normalized so that `⟨e*_I, e_I⟩ = 1`.
    pub fn pairing(&self, other: &Self) -> Result<S> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                form: self.degree,
                vector: other.degree,
            });
        }
        let (small, large) = if self.coords.len() <= other.coords.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .coords
            .iter()
            .filter_map(|(b, c)| large.coords.get(b).map(|d| c.clone() * d.clone()))
            .fold(S::zero(), |acc, x| acc + x))
    }

    /// Interior product `i_X ω` of the form `self` by the multivector `x`.
    ///
    /// Convention: `i_{e_j}` removes `e_j*` from its slot with sign
    /// `(-1)^(slot)` (slots counted from zero), and for `X = x_1 ∧ … ∧ x_q`,
    /// `i_X = i_{x_q} ∘ … ∘ i_{x_1}`. With this choice
    /// `⟨i_X ω, Y⟩ = ⟨ω, X ∧ Y⟩` and full contraction equals [`Self::pairing`].
    pub fn contract(&self, x: &Self) -> Result<Self> {
        if self.dim != x.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: x.dim,
            });
        }
        if x.degree > self.degree {
            return Err(Error::DegreeMismatch {
                form: self.degree,
                vector: x.degree,
            });
        }
        let mut out = Self::zero(self.dim, self.degree - x.degree);
        for (xb, xc) in &x.coords {
            for (fb, fc) in &self.coords {
                // contract each index of xb in turn, front to back
                let mut rest: ArrayVec<usize, MAX_DEGREE> = fb.indices().iter().copied().collect();
                let mut odd = false;
                let mut ok = true;
                for j in xb.indices() {
                    match rest.iter().position(|i| i == j) {
                        Some(slot) => {
                            odd ^= slot % 2 == 1;
                            rest.remove(slot);
                        }
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    out.add_term(Blade(rest), signed(xc.clone() * fc.clone(), odd));
                }
            }
        }
        Ok(out)
    }

    /// Map every coefficient, dropping those that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Blade, &S) -> S) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (b, c) in &self.coords {
            out.add_term(b.clone(), f(b, c));
        }
        out
    }

    /// Keep only the terms whose blade satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Blade) -> bool) -> Self {
        Multivector {
            dim: self.dim,
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> Add<&Multivector<S>> for &Multivector<S> {
    type Output = Multivector<S>;

    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<S: Scalar> Add for Multivector<S> {
    type Output = Multivector<S>;

    fn add(mut self, rhs: Multivector<S>) -> Multivector<S> {
        self += &rhs;
        self
    }
}

impl<S: Scalar> Sub<&Multivector<S>> for &Multivector<S> {
    type Output = Multivector<S>;

    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<S: Scalar> Sub for Multivector<S> {
    type Output = Multivector<S>;

    fn sub(mut self, rhs: Multivector<S>) -> Multivector<S> {
        self -= &rhs;
        self
    }
}

impl<S: Scalar> AddAssign<&Multivector<S>> for Multivector<S> {
    fn add_assign(&mut self, rhs: &Multivector<S>) {
        debug_assert_eq!(self.dim, rhs.dim);
        debug_assert_eq!(self.degree, rhs.degree);
        for (b, c) in &rhs.coords {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<S: Scalar> SubAssign<&Multivector<S>> for Multivector<S> {
    fn sub_assign(&mut self, rhs: &Multivector<S>) {
        debug_assert_eq!(self.dim, rhs.dim);
        debug_assert_eq!(self.degree, rhs.degree);
        for (b, c) in &rhs.coords {
            self.add_term(b.clone(), -c.clone());
        }
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        self.map_coeffs(|_, c| -c.clone())
    }
}

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;

    fn neg(self) -> Multivector<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (p, i) in b.indices().iter().enumerate() {
                write!(f, "{}e{}", if p == 0 { "·" } else { "∧" }, i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn e(i: usize) -> Multivector<Rational> {
        Multivector::basis(3, i)
    }

    #[test]
    fn wedge_basis_cases() {
        // e1∧e2, e2∧e1, (e1+e2)∧e2 with e1 = index 0, e2 = index 1
        let e12 = e(0).wedge(&e(1)).unwrap();
        assert_eq!(e12.get(&Blade::from_sorted(&[0, 1])), q(1));
        let e21 = e(1).wedge(&e(0)).unwrap();
        assert_eq!(e21.get(&Blade::from_sorted(&[0, 1])), q(-1));
        let sum = &e(0) + &e(1);
        assert_eq!(sum.wedge(&e(1)).unwrap(), e12);
        assert!(e(1).wedge(&e(1)).unwrap().is_zero());
    }

    #[test]
    fn wedge_rejects_degree_five() {
        let v = Multivector::<Rational>::term(6, &[0, 1, 2], q(1));
        let w = Multivector::<Rational>::term(6, &[3, 4], q(1));
        assert_eq!(
            v.wedge(&w).unwrap_err(),
            Error::UnsupportedDegree { degree: 5 }
        );
    }

    #[test]
    fn contraction_examples() {
        let f12 = Multivector::<Rational>::term(3, &[0, 1], q(1));
        assert_eq!(f12.pairing(&f12).unwrap(), q(1));
        assert_eq!(f12.contract(&f12).unwrap(), Multivector::scalar(3, q(1)));
        // i_{e1}(e1*∧e2*) = e2*
        assert_eq!(f12.contract(&e(0)).unwrap(), e(1));
        // i_{e2}(e1*∧e2*) = -e1*
        assert_eq!(f12.contract(&e(1)).unwrap(), -e(0));
        // i_{e1∧e2}(e1*∧e2*∧e3*) = e3*
        let f123 = Multivector::<Rational>::term(3, &[0, 1, 2], q(1));
        assert_eq!(f123.contract(&f12).unwrap(), e(2));
        assert_eq!(
            f12.contract(&f123).unwrap_err(),
            Error::DegreeMismatch { form: 2, vector: 3 }
        );
    }

    #[test]
    fn coeff_handles_order() {
        let x = Multivector::<Rational>::term(4, &[3, 1], q(5));
        assert_eq!(x.coeff(&[1, 3]), q(-5));
        assert_eq!(x.coeff(&[3, 1]), q(5));
        assert_eq!(x.coeff(&[1, 1]), q(0));
    }

    #[test]
    fn dense_round_trip() {
        let basis = WedgeBasis::new(4, 2);
        assert_eq!(basis.len(), 6);
        let x = Multivector::<Rational>::term(4, &[0, 3], q(2))
            + Multivector::term(4, &[2, 1], q(1));
        let v = x.to_dense(&basis);
        assert_eq!(Multivector::from_dense(&basis, &v), x);
    }
}
