//! Flat Lie algebras in normal form `𝔰 ⊕ 𝔷 ⊕ [g,g]`.
//!
//! The basis is `s_1..s_{k0}, z_1..z_{l0}, d_1..d_{2m}` with flat indices in that
//! order, orthonormal for the implicit metric. The only nonzero brackets are
//! `[s_i, d_{2j-1}] = λ_ij d_{2j}` and `[s_i, d_{2j}] = -λ_ij d_{2j-1}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exteralg::{Matrix, Multivector, WedgeBasis};
use crate::scalar::Scalar;

/// The `m × k0` matrix of rotation speeds. Row `j` (1-based) is
/// `L_j = (λ_1j, …, λ_k0j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicMatrix<S> {
    k0: usize,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> CharacteristicMatrix<S> {
    /// Validate and wrap `rows` (`m` rows of `k0` entries each).
    pub fn new(k0: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::Abelian);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != k0) {
            return Err(Error::MatrixShape {
                rows: m,
                cols: bad.len(),
                m,
                k0,
            });
        }
        if k0 > m {
            return Err(Error::TooManyGenerators { k0, m });
        }
        if let Some(j) = rows
            .iter()
            .position(|r| r.iter().all(|x| x.is_negligible()))
        {
            return Err(Error::ZeroRow { row: j + 1 });
        }
        let rank = Matrix::from_rows(k0, rows.clone()).rank();
        if rank < k0 {
            return Err(Error::NotInjective { rank, k0 });
        }
        Ok(CharacteristicMatrix { k0, rows })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(k0: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            k0,
            rows.iter()
                .map(|r| r.iter().map(|&x| S::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn k0(&self) -> usize {
        self.k0
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// `λ_ij` with `i` over `𝔰` and `j` over planes, both 1-based.
    pub fn lambda(&self, i: usize, j: usize) -> &S {
        &self.rows[j - 1][i - 1]
    }

    /// Row `L_j`, 1-based.
    pub fn row(&self, j: usize) -> &[S] {
        &self.rows[j - 1]
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }
}

/// Kind of a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    S,
    Z,
    D,
}

/// A basis vector named by kind and 1-based ordinal, e.g. `d3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub kind: BasisKind,
    pub ordinal: usize,
}

impl BasisIndex {
    pub fn s(i: usize) -> Self {
        BasisIndex {
            kind: BasisKind::S,
            ordinal: i,
        }
    }

    pub fn z(i: usize) -> Self {
        BasisIndex {
            kind: BasisKind::Z,
            ordinal: i,
        }
    }

    pub fn d(i: usize) -> Self {
        BasisIndex {
            kind: BasisKind::D,
            ordinal: i,
        }
    }

    /// For `d` vectors, the plane `⌈ordinal/2⌉` they belong to.
    pub fn plane(&self) -> Option<usize> {
        (self.kind == BasisKind::D).then(|| self.ordinal.div_ceil(2))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            BasisKind::S => 's',
            BasisKind::Z => 'z',
            BasisKind::D => 'd',
        };
        write!(f, "{c}{}", self.ordinal)
    }
}

impl FromStr for BasisIndex {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownBasisName(name.to_string());
        let mut chars = name.chars();
        let kind = match chars.next() {
            Some('s') => BasisKind::S,
            Some('z') => BasisKind::Z,
            Some('d') => BasisKind::D,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let ordinal = digits.parse().map_err(|_| unknown())?;
        Ok(BasisIndex { kind, ordinal })
    }
}

/// Outcome of the degeneracy test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub nondegenerate: bool,
    /// `(i, j, ε)` with `i < j` (1-based) and `L_j = ε L_i`.
    pub pairs: Vec<(usize, usize, i8)>,
    /// Set when a pair satisfies `λ_ki² = λ_kj²` for all `k` without
    /// `L_j = ±L_i`; lists those pairs.
    pub anomaly: Option<Vec<(usize, usize)>>,
}

/// A flat Lie algebra with all structure constants materialized. Two values
/// are equal when they have the same `l0` and `Λ`.
#[derive(Clone, Debug)]
pub struct FlatLieAlgebra<S> {
    l0: usize,
    lambda: CharacteristicMatrix<S>,
    brackets: Vec<Vec<Multivector<S>>>,
}

impl<S: Scalar> PartialEq for FlatLieAlgebra<S> {
    fn eq(&self, other: &Self) -> bool {
        self.l0 == other.l0 && self.lambda == other.lambda
    }
}

impl<S: Scalar> FlatLieAlgebra<S> {
    pub fn new(l0: usize, lambda: CharacteristicMatrix<S>) -> Self {
        let (k0, m) = (lambda.k0(), lambda.m());
        let n = k0 + l0 + 2 * m;
        let mut brackets = vec![vec![Multivector::zero(n, 1); n]; n];
        for i in 1..=k0 {
            for j in 1..=m {
                let l = lambda.lambda(i, j).clone();
                let (s, d1, d2) = (i - 1, k0 + l0 + 2 * j - 2, k0 + l0 + 2 * j - 1);
                brackets[s][d1] = Multivector::term(n, &[d2], l.clone());
                brackets[d1][s] = Multivector::term(n, &[d2], -l.clone());
                brackets[s][d2] = Multivector::term(n, &[d1], -l.clone());
                brackets[d2][s] = Multivector::term(n, &[d1], l);
            }
        }
        FlatLieAlgebra {
            l0,
            lambda,
            brackets,
        }
    }

    /// Validate `lambda` and build the algebra.
    pub fn build(k0: usize, l0: usize, m: usize, lambda: Vec<Vec<S>>) -> Result<Self> {
        if lambda.len() != m {
            return Err(Error::MatrixShape {
                rows: lambda.len(),
                cols: lambda.first().map_or(k0, Vec::len),
                m,
                k0,
            });
        }
        Ok(Self::new(l0, CharacteristicMatrix::new(k0, lambda)?))
    }

    /// Integer-entry convenience wrapper around [`Self::build`].
    pub fn from_ints(k0: usize, l0: usize, rows: &[&[i64]]) -> Result<Self> {
        Ok(Self::new(l0, CharacteristicMatrix::from_ints(k0, rows)?))
    }

    pub fn k0(&self) -> usize {
        self.lambda.k0()
    }

    pub fn l0(&self) -> usize {
        self.l0
    }

    pub fn m(&self) -> usize {
        self.lambda.m()
    }

    pub fn dim(&self) -> usize {
        self.k0() + self.l0 + 2 * self.m()
    }

    pub fn lambda(&self) -> &CharacteristicMatrix<S> {
        &self.lambda
    }

    /// `λ_ij`, 1-based.
    pub fn lam(&self, i: usize, j: usize) -> &S {
        self.lambda.lambda(i, j)
    }

    /// Flat index of `s_i` (1-based).
    pub fn s(&self, i: usize) -> usize {
        debug_assert!((1..=self.k0()).contains(&i));
        i - 1
    }

    /// Flat index of `z_i` (1-based).
    pub fn z(&self, i: usize) -> usize {
        debug_assert!((1..=self.l0).contains(&i));
        self.k0() + i - 1
    }

    /// Flat index of `d_i` (1-based, `1..=2m`).
    pub fn d(&self, i: usize) -> usize {
        debug_assert!((1..=2 * self.m()).contains(&i));
        self.k0() + self.l0 + i - 1
    }

    pub fn index(&self, b: BasisIndex) -> Result<usize> {
        let (count, flat) = match b.kind {
            BasisKind::S => (self.k0(), 0),
            BasisKind::Z => (self.l0, self.k0()),
            BasisKind::D => (2 * self.m(), self.k0() + self.l0),
        };
        if b.ordinal == 0 || b.ordinal > count {
            return Err(Error::UnknownBasisName(b.to_string()));
        }
        Ok(flat + b.ordinal - 1)
    }

    pub fn basis_index(&self, flat: usize) -> BasisIndex {
        let (k0, l0) = (self.k0(), self.l0);
        assert!(flat < self.dim(), "index out of range");
        if flat < k0 {
            BasisIndex::s(flat + 1)
        } else if flat < k0 + l0 {
            BasisIndex::z(flat - k0 + 1)
        } else {
            BasisIndex::d(flat - k0 - l0 + 1)
        }
    }

    pub fn basis_name(&self, flat: usize) -> String {
        self.basis_index(flat).to_string()
    }

    /// Name of a wedge of basis vectors, e.g. `s1^d2`.
    pub fn wedge_name(&self, indices: &[usize]) -> String {
        indices.iter().map(|&i| self.basis_name(i)).join("^")
    }

    /// `v` written with basis names, e.g. `2 s1^d1^d2 - d1^d2`; `dual` marks
    /// every factor with `*`.
    pub fn format(&self, v: &Multivector<S>, dual: bool) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let star = if dual { "*" } else { "" };
        let mut out = String::new();
        for (k, (b, c)) in v.terms().enumerate() {
            let name = b
                .indices()
                .iter()
                .map(|&i| format!("{}{star}", self.basis_name(i)))
                .join("^");
            let coeff = c.to_string();
            let (negative, magnitude) = match coeff.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, coeff),
            };
            out.push_str(match (k, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            if b.degree() == 0 {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{magnitude} {name}"));
            }
        }
        out
    }

    /// Parse a basis vector name against this algebra.
    pub fn parse_basis(&self, name: &str) -> Result<usize> {
        self.index(name.parse()?)
    }

    pub fn basis_vector(&self, flat: usize) -> Multivector<S> {
        Multivector::basis(self.dim(), flat)
    }

    /// `[e_x, e_y]` for flat indices.
    pub fn bracket_basis(&self, x: usize, y: usize) -> &Multivector<S> {
        &self.brackets[x][y]
    }

    /// Bilinear bracket of two vectors.
    pub fn bracket(&self, x: &Multivector<S>, y: &Multivector<S>) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim(), 1);
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let b = &self.brackets[bx.indices()[0]][by.indices()[0]];
                if !b.is_zero() {
                    out.axpy(&(cx.clone() * cy.clone()), b);
                }
            }
        }
        out
    }

    /// Derivation extension of `ad_{e_x}` applied to a multivector of any degree.
    pub fn ad_basis(&self, x: usize, v: &Multivector<S>) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim(), v.degree());
        let mut buf = Vec::with_capacity(v.degree());
        for (blade, c) in v.terms() {
            for (pos, &i) in blade.indices().iter().enumerate() {
                for (bb, bc) in self.brackets[x][i].terms() {
                    buf.clear();
                    buf.extend_from_slice(blade.indices());
                    buf[pos] = bb.indices()[0];
                    out.add_wedge(&buf, c.clone() * bc.clone());
                }
            }
        }
        out
    }

    /// `ad_x v` for a vector `x` and a multivector `v`.
    pub fn ad(&self, x: &Multivector<S>, v: &Multivector<S>) -> Multivector<S> {
        let mut out = Multivector::zero(self.dim(), v.degree());
        for (bx, cx) in x.terms() {
            out.axpy(cx, &self.ad_basis(bx.indices()[0], v));
        }
        out
    }

    /// Matrix of `ad_x` on `∧^p g` over the canonical wedge basis.
    pub fn adjoint(&self, x: &Multivector<S>, p: usize) -> Matrix<S> {
        let basis = WedgeBasis::new(self.dim(), p);
        self.adjoint_on(x, &basis)
    }

    pub fn adjoint_on(&self, x: &Multivector<S>, basis: &WedgeBasis) -> Matrix<S> {
        let mut m = Matrix::zeros(basis.len(), basis.len());
        for (col, blade) in basis.blades().iter().enumerate() {
            let image = self.ad(x, &Multivector::term(self.dim(), blade.indices(), S::one()));
            for (b, c) in image.terms() {
                m.set(basis.position(b).expect("same degree"), col, c.clone());
            }
        }
        m
    }

    /// Levi-Civita connection `∇_x y` of the metric making the basis orthonormal.
    pub fn levi_civita(&self, x: &Multivector<S>, y: &Multivector<S>) -> Multivector<S> {
        let n = self.dim();
        let half = S::one() / S::two();
        let xy = self.bracket(x, y);
        let mut out = Multivector::zero(n, 1);
        for c in 0..n {
            let ec = self.basis_vector(c);
            let zx = self.bracket(&ec, x);
            let zy = self.bracket(&ec, y);
            let value = xy.coeff(&[c])
                + zx.pairing(y).expect("vectors")
                + zy.pairing(x).expect("vectors");
            out.add_wedge(&[c], half.clone() * value);
        }
        out
    }

    /// `R(x,y,z) = ∇_{[x,y]} z − (∇_x ∇_y z − ∇_y ∇_x z)`.
    pub fn curvature(
        &self,
        x: &Multivector<S>,
        y: &Multivector<S>,
        z: &Multivector<S>,
    ) -> Multivector<S> {
        let xy = self.bracket(x, y);
        let a = self.levi_civita(&xy, z);
        let b = self.levi_civita(x, &self.levi_civita(y, z));
        let c = self.levi_civita(y, &self.levi_civita(x, z));
        &(&a - &b) + &c
    }

    /// First basis triple violating the Jacobi identity, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n).tuple_combinations().find(|&(x, y, z)| {
            let (ex, ey, ez) = (self.basis_vector(x), self.basis_vector(y), self.basis_vector(z));
            let j = self.bracket(&ex, &self.bracket(&ey, &ez))
                + self.bracket(&ey, &self.bracket(&ez, &ex))
                + self.bracket(&ez, &self.bracket(&ex, &ey));
            !j.is_zero()
        })
    }

    /// First basis vector whose adjoint has nonzero trace, if any.
    pub fn trace_violation(&self) -> Option<usize> {
        (0..self.dim()).find(|&x| {
            let trace = (0..self.dim())
                .map(|y| self.bracket_basis(x, y).coeff(&[y]))
                .fold(S::zero(), |a, b| a + b);
            !trace.is_negligible()
        })
    }

    /// First basis triple with nonzero curvature, if any.
    pub fn curvature_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n)
            .cartesian_product(0..n)
            .cartesian_product(0..n)
            .map(|((x, y), z)| (x, y, z))
            .find(|&(x, y, z)| {
                !self
                    .curvature(&self.basis_vector(x), &self.basis_vector(y), &self.basis_vector(z))
                    .is_zero()
            })
    }

    /// Degeneracy classification by both the squared criterion and the row
    /// criterion `L_j = εL_i`.
    pub fn classify(&self) -> DegeneracyReport {
        let lam = &self.lambda;
        let mut pairs = Vec::new();
        let mut anomalous = Vec::new();
        for (i, j) in (1..=lam.m()).tuple_combinations() {
            let (li, lj) = (lam.row(i), lam.row(j));
            let squared = li
                .iter()
                .zip(lj)
                .all(|(a, b)| (a.clone() * a.clone() - b.clone() * b.clone()).is_negligible());
            if !squared {
                continue;
            }
            if let Some(eps) = row_sign(li, lj) {
                pairs.push((i, j, eps));
            } else {
                anomalous.push((i, j));
            }
        }
        DegeneracyReport {
            nondegenerate: pairs.is_empty() && anomalous.is_empty(),
            pairs,
            anomaly: (!anomalous.is_empty()).then_some(anomalous),
        }
    }
}

/// `Some(ε)` when `b = ε a` for `ε = ±1`.
pub(crate) fn row_sign<S: Scalar>(a: &[S], b: &[S]) -> Option<i8> {
    if a.iter().zip(b).all(|(x, y)| (x.clone() - y.clone()).is_negligible()) {
        Some(1)
    } else if a.iter().zip(b).all(|(x, y)| (x.clone() + y.clone()).is_negligible()) {
        Some(-1)
    } else {
        None
    }
}

/// `Some(c)` for `c ∈ candidates` with `b = c · a` entrywise.
pub(crate) fn row_multiple<S: Scalar>(a: &[S], b: &[S], candidates: &[i64]) -> Option<i64> {
    candidates.iter().copied().find(|&c| {
        a.iter()
            .zip(b)
            .all(|(x, y)| (y.clone() - S::from_i64(c) * x.clone()).is_negligible())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type Alg = FlatLieAlgebra<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn build_rejects_invalid() {
        assert_eq!(
            Alg::from_ints(1, 0, &[&[1], &[0]]).unwrap_err(),
            Error::ZeroRow { row: 2 }
        );
        assert_eq!(
            Alg::from_ints(2, 0, &[&[1, 1], &[2, 2]]).unwrap_err(),
            Error::NotInjective { rank: 1, k0: 2 }
        );
        assert_eq!(
            Alg::from_ints(2, 0, &[&[1, 0]]).unwrap_err(),
            Error::TooManyGenerators { k0: 2, m: 1 }
        );
        assert_eq!(Alg::from_ints(0, 1, &[]).unwrap_err(), Error::Abelian);
    }

    #[test]
    fn format_signs() {
        let g = Alg::from_ints(1, 0, &[&[1]]).unwrap();
        let mut v = Multivector::term(3, &[0, 1, 2], q(2));
        assert_eq!(g.format(&v, false), "2 s1^d1^d2");
        let mut w = Multivector::term(3, &[0], q(-1));
        w.add_wedge(&[2], Rational::new(1.into(), 2.into()));
        assert_eq!(g.format(&w, true), "-s1* + 1/2 d2*");
        v.add_wedge(&[0, 1, 2], q(-2));
        assert_eq!(g.format(&v, false), "0");
    }

    #[test]
    fn brackets_of_small_algebras() {
        let g = Alg::from_ints(1, 0, &[&[1]]).unwrap();
        let (s, d1, d2) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        assert_eq!(g.bracket(&s, &d1), d2);
        assert_eq!(g.bracket(&s, &d2), -d1.clone());
        assert!(g.bracket(&d1, &d2).is_zero());
        let g4 = Alg::from_ints(1, 1, &[&[1]]).unwrap();
        assert!(g4.bracket(&g4.basis_vector(1), &g4.basis_vector(0)).is_zero());
    }

    #[test]
    fn adjoint_examples() {
        let g = Alg::from_ints(1, 0, &[&[1]]).unwrap();
        let s = g.basis_vector(0);
        let d1 = g.basis_vector(1);
        let n = g.dim();
        assert!(g.ad(&s, &Multivector::term(n, &[1, 2], q(1))).is_zero());
        assert_eq!(
            g.ad(&s, &Multivector::term(n, &[0, 1], q(1))),
            Multivector::term(n, &[0, 2], q(1))
        );
        assert_eq!(
            g.ad(&d1, &Multivector::term(n, &[0, 1], q(1))),
            Multivector::term(n, &[1, 2], q(1))
        );
    }

    #[test]
    fn connection_examples() {
        let g = Alg::from_ints(1, 0, &[&[1]]).unwrap();
        let (s, d1, d2) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
        assert_eq!(g.levi_civita(&s, &d1), d2);
        assert!(g.levi_civita(&d1, &d1).is_zero());
        assert!(g.curvature(&s, &d1, &d2).is_zero());
    }

    #[test]
    fn classify_examples() {
        let g = Alg::from_ints(1, 0, &[&[1], &[2]]).unwrap();
        assert!(g.classify().nondegenerate);
        let g = Alg::from_ints(1, 0, &[&[1], &[-1]]).unwrap();
        let r = g.classify();
        assert!(!r.nondegenerate);
        assert_eq!(r.pairs, vec![(1, 2, -1)]);
        assert_eq!(r.anomaly, None);
        let g = Alg::from_ints(1, 0, &[&[1]]).unwrap();
        assert_eq!(
            g.classify(),
            DegeneracyReport {
                nondegenerate: true,
                pairs: vec![],
                anomaly: None
            }
        );
        let g = Alg::from_ints(2, 0, &[&[1, 2], &[1, -2]]).unwrap();
        let r = g.classify();
        assert!(!r.nondegenerate);
        assert!(r.pairs.is_empty());
        assert_eq!(r.anomaly, Some(vec![(1, 2)]));
    }

    #[test]
    fn basis_names_round_trip() {
        let g = Alg::from_ints(2, 1, &[&[1, 0], &[0, 1]]).unwrap();
        for i in 0..g.dim() {
            assert_eq!(g.parse_basis(&g.basis_name(i)).unwrap(), i);
        }
        assert_eq!(g.basis_name(2), "z1");
        assert_eq!(g.basis_index(6).plane(), Some(2));
        assert!(g.parse_basis("z2").is_err());
        assert!(g.parse_basis("d01").is_err());
        assert!(g.parse_basis("x1").is_err());
    }
}
