//! Linear algebra over a [`Scalar`] field.
//!
//! Dense systems use fraction-free (Bareiss) elimination followed by
//! back-substitution to reduced row echelon form. Large sparse systems are
//! reduced incrementally with [`SparseEchelon`]. Subspaces are compared through
//! their unique RREF basis ([`SubspaceBasis`]).

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![S::zero(); cols]; rows],
        }
    }

    /// Build from rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, data: Vec<Vec<S>>) -> Self {
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i][j] = value;
    }

    pub fn push_row(&mut self, row: Vec<S>) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.rows += 1;
    }

    pub fn into_rows(self) -> Vec<Vec<S>> {
        self.data
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| dot(row, v))
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.data.clone();
        let pivots = bareiss_echelon(&mut m, self.cols);
        back_substitute(&mut m, &pivots);
        m.truncate(pivots.len());
        (Matrix::from_rows(self.cols, m), pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        bareiss_echelon(&mut m, self.cols).len()
    }

    /// A basis of `{v : M v = 0}`, one vector per free column, in canonical
    /// RREF form.
    pub fn nullspace(&self) -> SubspaceBasis<S> {
        let (r, pivots) = self.rref();
        SubspaceBasis::from_vectors(self.cols, nullspace_from_rref(r.data.iter(), &pivots, self.cols))
    }

    /// Some `x` with `M x = b`, with every free variable set to zero; `None`
    /// when the system is inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut m: Vec<Vec<S>> = self
            .data
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let pivots = bareiss_echelon(&mut m, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        back_substitute(&mut m, &pivots);
        let mut x = vec![S::zero(); self.cols];
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }
}

pub(crate) fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_negligible() && !y.is_negligible())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// In-place fraction-free elimination to row echelon form. Returns the pivot
/// columns; rows `0..pivots.len()` hold the pivot rows, the rest are zero.
fn bareiss_echelon<S: Scalar>(m: &mut [Vec<S>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_negligible()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let factor = m[i][c].clone();
            if factor.is_negligible() {
                // the row still needs the common scaling to stay fraction-free
                for j in c..cols {
                    if !m[i][j].is_negligible() {
                        m[i][j] = m[i][j].clone() * pivot.clone() / prev.clone();
                    }
                }
                continue;
            }
            for j in c..cols {
                let value = pivot.clone() * m[i][j].clone() - factor.clone() * m[r][j].clone();
                m[i][j] = if value.is_negligible() {
                    S::zero()
                } else {
                    value / prev.clone()
                };
            }
            m[i][c] = S::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    for row in m.iter_mut().skip(r) {
        row.iter_mut().for_each(|x| *x = S::zero());
    }
    pivots
}

/// Turn an echelon form into RREF: unit pivots, zeros above each pivot.
fn back_substitute<S: Scalar>(m: &mut [Vec<S>], pivots: &[usize]) {
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = S::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            if !x.is_negligible() {
                *x = x.clone() * inv.clone();
            }
        }
        m[r][c] = S::one();
        for i in 0..r {
            let factor = m[i][c].clone();
            if factor.is_negligible() {
                continue;
            }
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                if !y.is_negligible() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
            m[i][c] = S::zero();
        }
    }
}

fn nullspace_from_rref<'a, S: Scalar>(
    rows: impl Iterator<Item = &'a Vec<S>>,
    pivots: &[usize],
    cols: usize,
) -> Vec<Vec<S>> {
    let rows: Vec<&Vec<S>> = rows.collect();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![S::zero(); cols];
            v[f] = S::one();
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// A linear subspace of `S^dim`, stored as its unique RREF basis. Two values
/// are equal exactly when they describe the same subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceBasis<S> {
    dim: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> SubspaceBasis<S> {
    pub fn zero(dim: usize) -> Self {
        SubspaceBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The span of `vectors`.
    pub fn from_vectors(dim: usize, vectors: Vec<Vec<S>>) -> Self {
        let (m, pivots) = Matrix::from_rows(dim, vectors).rref();
        SubspaceBasis {
            dim,
            rows: m.into_rows(),
            pivots,
        }
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vectors(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after reduction by the basis; zero iff `v` is a member.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.dim);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let factor = out[p].clone();
            if factor.is_negligible() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_negligible() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_negligible())
    }

    /// Coordinates of a member in terms of [`Self::vectors`].
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Sum of two subspaces.
    pub fn join(&self, other: &Self) -> Self {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Self::from_vectors(self.dim, all)
    }

    /// The annihilator `{w : ⟨w, v⟩ = 0 for all v in self}` under the standard
    /// pairing.
    pub fn annihilator(&self) -> Self {
        Matrix::from_rows(self.dim, self.rows.clone()).nullspace()
    }
}

/// Incremental sparse Gaussian elimination. Rows are inserted one at a time and
/// kept in echelon form with unit pivots.
#[derive(Clone, Debug)]
pub struct SparseEchelon<S> {
    cols: usize,
    rows: BTreeMap<usize, BTreeMap<usize, S>>,
}

impl<S: Scalar> SparseEchelon<S> {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a row given as `(column, value)` entries; returns whether it
    /// increased the rank.
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, S)>) -> bool {
        let mut row: BTreeMap<usize, S> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols);
            add_entry(&mut row, c, v);
        }
        loop {
            let Some((&lead, lead_value)) = row.iter().next() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    let factor = lead_value.clone();
                    for (&c, v) in pivot_row {
                        add_entry(&mut row, c, -(factor.clone() * v.clone()));
                    }
                }
                None => {
                    let inv = S::one() / lead_value.clone();
                    for v in row.values_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    row.insert(lead, S::one());
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// The kernel of the accumulated rows.
    pub fn nullspace(mut self) -> SubspaceBasis<S> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let pivot_row = self.rows[&p].clone();
            for (_, row) in self.rows.range_mut(..p) {
                if let Some(factor) = row.get(&p).cloned() {
                    for (&c, v) in &pivot_row {
                        add_entry(row, c, -(factor.clone() * v.clone()));
                    }
                }
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (&p, row) in &self.rows {
                    if let Some(x) = row.get(&f) {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect();
        SubspaceBasis::from_vectors(self.cols, vectors)
    }
}

fn add_entry<S: Scalar>(row: &mut BTreeMap<usize, S>, c: usize, v: S) {
    if v.is_negligible() {
        return;
    }
    match row.get_mut(&c) {
        Some(x) => {
            let sum = x.clone() + v;
            if sum.is_negligible() {
                row.remove(&c);
            } else {
                *x = sum;
            }
        }
        None => {
            row.insert(c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows[0].len(),
            rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
        )
    }

    #[test]
    fn rref_known() {
        let m = mat(&[&[2, 4, 2], &[1, 2, 3], &[3, 6, 5]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r, mat(&[&[1, 2, 0], &[0, 0, 1]]));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = mat(&[&[1, 1, 0, 2], &[0, 1, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 2);
        for v in ns.vectors() {
            assert!(m.mul_vec(v).iter().all(|x| x == &q(0)));
        }
    }

    #[test]
    fn solve_and_inconsistency() {
        let m = mat(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.solve(&[q(3), q(1)]).unwrap(), vec![q(2), q(1)]);
        let s = mat(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[q(1), q(3)]).is_none());
        assert_eq!(s.solve(&[q(1), q(2)]).unwrap(), vec![q(1), q(0)]);
    }

    #[test]
    fn sparse_matches_dense() {
        let m = mat(&[&[0, 1, 2, 0, 1], &[1, 0, 0, 1, 0], &[1, 1, 2, 1, 1], &[0, 0, 3, 0, 1]]);
        let mut sparse = SparseEchelon::new(5);
        for i in 0..m.rows() {
            sparse.insert(m.row(i).iter().cloned().enumerate());
        }
        assert_eq!(sparse.rank(), m.rank());
        assert_eq!(sparse.nullspace(), m.nullspace());
    }

    #[test]
    fn subspace_membership_and_annihilator() {
        let s = SubspaceBasis::from_vectors(3, vec![vec![q(1), q(1), q(0)], vec![q(2), q(2), q(0)]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[q(-3), q(-3), q(0)]));
        assert!(!s.contains(&[q(1), q(0), q(0)]));
        assert_eq!(s.coordinates(&[q(5), q(5), q(0)]).unwrap(), vec![q(5)]);
        let ann = s.annihilator();
        assert_eq!(ann.dim(), 2);
        assert_eq!(ann.annihilator(), s);
    }
}
