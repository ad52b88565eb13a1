//! Independent reference computations for integration tests. Everything here
//! works from raw structure constants built straight from `Λ`, without the
//! library's bracket, adjoint, connection, Schouten or dual-bracket code.

#![allow(dead_code)]

use flatbialg::exteralg::{Matrix, Multivector, SubspaceBasis, WedgeBasis};
use flatbialg::{Algebra, CochainQ, MultivectorQ, Rational, Scalar};
use itertools::Itertools;
use num_traits::Zero;

pub type Q = Rational;

pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

pub fn qr(p: i64, d: i64) -> Q {
    Q::from_ratio(p, d)
}

/// Structure constants `c[x][y][z] = ⟨[e_x, e_y], e_z⟩`.
pub struct Oracle {
    pub n: usize,
    pub k0: usize,
    pub l0: usize,
    pub m: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Oracle {
    pub fn new(k0: usize, l0: usize, rows: &[Vec<Q>]) -> Self {
        let m = rows.len();
        let n = k0 + l0 + 2 * m;
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        for i in 0..k0 {
            for (j, row) in rows.iter().enumerate() {
                let odd = k0 + l0 + 2 * j;
                let even = odd + 1;
                let lam = row[i].clone();
                c[i][odd][even] = lam.clone();
                c[odd][i][even] = -lam.clone();
                c[i][even][odd] = -lam.clone();
                c[even][i][odd] = lam;
            }
        }
        Oracle { n, k0, l0, m, c }
    }

    pub fn from_algebra(g: &Algebra) -> Self {
        let rows: Vec<Vec<Q>> = (1..=g.m())
            .map(|j| (1..=g.k0()).map(|i| g.lam(i, j).clone()).collect())
            .collect();
        Oracle::new(g.k0(), g.l0(), &rows)
    }

    pub fn s(&self, i: usize) -> usize {
        i - 1
    }

    pub fn z(&self, i: usize) -> usize {
        self.k0 + i - 1
    }

    pub fn d(&self, i: usize) -> usize {
        self.k0 + self.l0 + i - 1
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for z in 0..self.n {
                    if !self.c[a][b][z].is_zero() {
                        out[z] += xa * yb * &self.c[a][b][z];
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n];
        v[i] = q(1);
        v
    }

    /// Levi-Civita connection of the orthonormal metric (Koszul formula):
    /// `⟨∇_x y, w⟩ = ½(⟨[x,y],w⟩ - ⟨[x,w],y⟩ - ⟨[y,w],x⟩)`.
    pub fn nabla(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let xy = self.bracket(x, y);
        (0..self.n)
            .map(|w| {
                let ew = self.unit(w);
                let xw = self.bracket(x, &ew);
                let yw = self.bracket(y, &ew);
                let dot = |a: &[Q], b: &[Q]| a.iter().zip(b).fold(Q::zero(), |s, (p, q)| s + p * q);
                (xy[w].clone() - dot(&xw, y) - dot(&yw, x)) / q(2)
            })
            .collect()
    }

    pub fn curvature(&self, x: &[Q], y: &[Q], z: &[Q]) -> Vec<Q> {
        let a = self.nabla(x, &self.nabla(y, z));
        let b = self.nabla(y, &self.nabla(x, z));
        let c = self.nabla(&self.bracket(x, y), z);
        (0..self.n).map(|i| a[i].clone() - b[i].clone() - c[i].clone()).collect()
    }

    pub fn jacobi_holds(&self) -> bool {
        (0..self.n).tuple_combinations().all(|(a, b, c)| {
            let (ea, eb, ec) = (self.unit(a), self.unit(b), self.unit(c));
            let j1 = self.bracket(&ea, &self.bracket(&eb, &ec));
            let j2 = self.bracket(&eb, &self.bracket(&ec, &ea));
            let j3 = self.bracket(&ec, &self.bracket(&ea, &eb));
            (0..self.n).all(|i| (j1[i].clone() + j2[i].clone() + j3[i].clone()).is_zero())
        })
    }

    pub fn unimodular(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).fold(Q::zero(), |s, y| s + &self.c[x][y][y]).is_zero())
    }

    /// `ad_{e_x}` acting on a multivector as a derivation.
    pub fn ad(&self, x: usize, v: &MultivectorQ) -> MultivectorQ {
        let mut out = Multivector::zero(self.n, v.degree());
        for (blade, coef) in v.terms() {
            let idx = blade.indices();
            for k in 0..idx.len() {
                for w in 0..self.n {
                    let cw = &self.c[x][idx[k]][w];
                    if cw.is_zero() {
                        continue;
                    }
                    let mut repl = idx.to_vec();
                    repl[k] = w;
                    out.add_wedge(&repl, coef * cw);
                }
            }
        }
        out
    }

    pub fn is_invariant(&self, v: &MultivectorQ) -> bool {
        (0..self.n).all(|x| self.ad(x, v).is_zero())
    }

    /// `(∧^p g)^g` as the common kernel of the `ad_x`, assembled here.
    pub fn invariants(&self, p: usize) -> SubspaceBasis<Q> {
        let basis = WedgeBasis::new(self.n, p);
        let mut rows = Vec::new();
        for x in 0..self.n {
            let cols: Vec<Vec<Q>> = basis
                .blades()
                .iter()
                .map(|b| self.ad(x, &Multivector::term(self.n, b.indices(), q(1))).to_dense(&basis))
                .collect();
            for r in 0..basis.len() {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        Matrix::from_rows(basis.len(), rows).nullspace()
    }

    /// `ad r` as a cochain: `x ↦ ad_x r`.
    pub fn coboundary(&self, r: &MultivectorQ) -> CochainQ {
        CochainQ::from_values((0..self.n).map(|x| self.ad(x, r)).collect()).unwrap()
    }

    /// Schouten bracket of bivectors by expansion over decomposable terms:
    /// `[x∧y, u∧v] = [x,u]∧y∧v - [x,v]∧y∧u - [y,u]∧x∧v + [y,v]∧x∧u`.
    pub fn schouten(&self, r1: &MultivectorQ, r2: &MultivectorQ) -> MultivectorQ {
        let mut out = Multivector::zero(self.n, 3);
        for (b1, c1) in r1.terms() {
            for (b2, c2) in r2.terms() {
                let (x, y) = (b1.indices()[0], b1.indices()[1]);
                let (u, v) = (b2.indices()[0], b2.indices()[1]);
                let coef = c1 * c2;
                for (a, b, p, r, sign) in [(x, u, y, v, 1), (x, v, y, u, -1), (y, u, x, v, -1), (y, v, x, u, 1)] {
                    for w in 0..self.n {
                        let cw = &self.c[a][b][w];
                        if !cw.is_zero() {
                            out.add_wedge(&[w, p, r], &coef * cw * q(sign));
                        }
                    }
                }
            }
        }
        out
    }

    /// Structure constants of the transpose of `ξ`:
    /// `t[a][b][c] = ⟨e_a^* ∧ e_b^*, ξ(e_c)⟩`.
    pub fn dual_constants(&self, xi: &CochainQ) -> Vec<Vec<Vec<Q>>> {
        let mut t = vec![vec![vec![Q::zero(); self.n]; self.n]; self.n];
        for c in 0..self.n {
            for (blade, v) in xi.value(c).terms() {
                let (a, b) = (blade.indices()[0], blade.indices()[1]);
                t[a][b][c] = v.clone();
                t[b][a][c] = -v.clone();
            }
        }
        t
    }

    pub fn dual_jacobiator(t: &[Vec<Vec<Q>>], a: usize, b: usize, c: usize) -> Vec<Q> {
        let n = t.len();
        let br = |u: &[Q], v: &[Q]| -> Vec<Q> {
            let mut out = vec![Q::zero(); n];
            for i in 0..n {
                for j in 0..n {
                    if u[i].is_zero() || v[j].is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        if !t[i][j][k].is_zero() {
                            out[k] += &u[i] * &v[j] * &t[i][j][k];
                        }
                    }
                }
            }
            out
        };
        let unit = |i: usize| {
            let mut v = vec![Q::zero(); n];
            v[i] = q(1);
            v
        };
        let (ea, eb, ec) = (unit(a), unit(b), unit(c));
        let j1 = br(&ea, &br(&eb, &ec));
        let j2 = br(&eb, &br(&ec, &ea));
        let j3 = br(&ec, &br(&ea, &eb));
        (0..n).map(|i| j1[i].clone() + j2[i].clone() + j3[i].clone()).collect()
    }

    /// Jacobi for the transpose of `ξ`, over all ordered triples.
    pub fn is_bialgebra(&self, xi: &CochainQ) -> bool {
        let t = self.dual_constants(xi);
        (0..self.n)
            .cartesian_product(0..self.n)
            .cartesian_product(0..self.n)
            .all(|((a, b), c)| Self::dual_jacobiator(&t, a, b, c).iter().all(|v| v.is_zero()))
    }

    /// Cocycle identity `ξ([x,y]) = ad_x ξ(y) - ad_y ξ(x)` on basis pairs.
    pub fn is_cocycle(&self, xi: &CochainQ) -> bool {
        (0..self.n).tuple_combinations().all(|(x, y)| {
            let mut lhs = Multivector::zero(self.n, 2);
            for w in 0..self.n {
                let cw = &self.c[x][y][w];
                if !cw.is_zero() {
                    lhs.axpy(cw, xi.value(w));
                }
            }
            lhs == &self.ad(x, xi.value(y)) - &self.ad(y, xi.value(x))
        })
    }
}

pub fn dim3() -> Algebra {
    Algebra::from_ints(1, 0, &[&[1]]).unwrap()
}

pub fn dim4() -> Algebra {
    Algebra::from_ints(1, 1, &[&[1]]).unwrap()
}

pub fn bivector(n: usize, terms: &[(usize, usize, i64)]) -> MultivectorQ {
    let mut out = Multivector::zero(n, 2);
    for &(i, j, x) in terms {
        out.add_wedge(&[i, j], q(x));
    }
    out
}

/// `(a, b, c, e)` family of the 3-dimensional algebra.
pub fn dim3_cocycle(a: i64, b: i64, c: i64, e: i64) -> CochainQ {
    CochainQ::from_values(vec![
        bivector(3, &[(0, 1, a), (0, 2, b), (1, 2, c)]),
        bivector(3, &[(0, 1, e), (1, 2, b)]),
        bivector(3, &[(0, 2, e), (1, 2, -a)]),
    ])
    .unwrap()
}

/// Family of the 4-dimensional algebra in
/// `(n11^((1)), c11, e11, g11, h11, n11, c11^(1), g11^(1), h11^(1))`.
pub fn dim4_cocycle(p: &[i64]) -> CochainQ {
    let (nz, c, e, gs, h, n, cc, gg, hh) = (p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
    CochainQ::from_values(vec![
        bivector(4, &[(0, 2, c), (0, 3, e), (1, 2, gs), (1, 3, h), (2, 3, n)]),
        bivector(4, &[(2, 3, nz)]),
        bivector(4, &[(0, 2, cc), (1, 2, gg), (1, 3, hh), (2, 3, e)]),
        bivector(4, &[(0, 3, cc), (1, 2, -hh), (1, 3, gg), (2, 3, -c)]),
    ])
    .unwrap()
}

pub fn grid(len: usize) -> impl Iterator<Item = Vec<i64>> {
    std::iter::repeat_n([-1i64, 0, 1], len).multi_cartesian_product()
}
