use itertools::Itertools;
use rayon::prelude::*;

use crate::cohomology::cochain::{coboundary, Cochain};
use crate::error::{Error, Result};
use crate::exteralg::{Matrix, Multivector, SparseEchelon, SubspaceBasis, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// The space of 1-cocycles `g → ∧²g` in the flat cochain layout
/// (see [`Cochain::to_flat`]).
///
/// Rows of the cocycle operator are assembled per basis pair in parallel and
/// then fed, in pair order, to an incremental sparse eliminator.
pub fn cocycle_space<S: Scalar>(g: &FlatLieAlgebra<S>) -> SubspaceBasis<S> {
    let n = g.dim();
    let basis = WedgeBasis::new(n, 2);
    let nb = basis.len();
    let units: Vec<Multivector<S>> = basis
        .blades()
        .iter()
        .map(|b| Multivector::term(n, b.indices(), S::one()))
        .collect();
    // ad_x of every basis bivector
    let ad: Vec<Vec<Multivector<S>>> = (0..n)
        .map(|x| units.iter().map(|u| g.ad_basis(x, u)).collect())
        .collect();
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let blocks: Vec<Vec<Vec<(usize, S)>>> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let mut rows: Vec<Vec<(usize, S)>> = vec![Vec::new(); nb];
            // ξ([x,y])
            for (w, cw) in g.bracket_basis(x, y).terms() {
                let w = w.indices()[0];
                for (b, row) in rows.iter_mut().enumerate() {
                    row.push((w * nb + b, cw.clone()));
                }
            }
            // − ad_x ξ(y) + ad_y ξ(x)
            for (b, image) in ad[x].iter().enumerate() {
                for (t, c) in image.terms() {
                    let r = basis.position(t).expect("bivector");
                    rows[r].push((y * nb + b, -c.clone()));
                }
            }
            for (b, image) in ad[y].iter().enumerate() {
                for (t, c) in image.terms() {
                    let r = basis.position(t).expect("bivector");
                    rows[r].push((x * nb + b, c.clone()));
                }
            }
            rows
        })
        .collect();
    let mut echelon = SparseEchelon::new(n * nb);
    for row in blocks.into_iter().flatten() {
        if !row.is_empty() {
            echelon.insert(row);
        }
    }
    echelon.nullspace()
}

/// Independent dense construction of [`cocycle_space`]: each column of the
/// operator is the residual of a unit cochain.
pub fn cocycle_space_dense<S: Scalar>(g: &FlatLieAlgebra<S>) -> SubspaceBasis<S> {
    let n = g.dim();
    let basis = WedgeBasis::new(n, 2);
    let cols = n * basis.len();
    let columns: Vec<Vec<S>> = (0..cols)
        .into_par_iter()
        .map(|k| {
            let mut unit = vec![S::zero(); cols];
            unit[k] = S::one();
            Cochain::from_flat(n, &unit)
                .residual(g)
                .into_iter()
                .flat_map(|(_, r)| r.to_dense(&basis))
                .collect()
        })
        .collect();
    let rows = columns[0].len();
    let mut m = Matrix::zeros(rows, cols);
    for (j, col) in columns.into_iter().enumerate() {
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_negligible() {
                m.set(i, j, v);
            }
        }
    }
    m.nullspace()
}

/// The space of coboundaries `x ↦ ad_x r`, in the flat cochain layout.
pub fn coboundary_space<S: Scalar>(g: &FlatLieAlgebra<S>) -> SubspaceBasis<S> {
    let n = g.dim();
    let basis = WedgeBasis::new(n, 2);
    let vectors = basis
        .blades()
        .iter()
        .map(|b| coboundary(g, &Multivector::term(n, b.indices(), S::one())).to_flat())
        .collect();
    SubspaceBasis::from_vectors(n * basis.len(), vectors)
}

/// `(∧^p g)^g`: the joint kernel of `ad_x` over all basis vectors `x`, as a
/// subspace of `∧^p g` in canonical wedge coordinates.
pub fn invariants<S: Scalar>(g: &FlatLieAlgebra<S>, p: usize) -> Result<SubspaceBasis<S>> {
    if p > crate::exteralg::MAX_DEGREE {
        return Err(Error::UnsupportedDegree { degree: p });
    }
    let basis = WedgeBasis::new(g.dim(), p);
    let mut stacked = Matrix::zeros(0, basis.len());
    for x in 0..g.dim() {
        let a = g.adjoint_on(&g.basis_vector(x), &basis);
        for row in a.into_rows() {
            if row.iter().any(|v| !v.is_negligible()) {
                stacked.push_row(row);
            }
        }
    }
    Ok(stacked.nullspace())
}

/// The invariant bivectors predicted by the closed form: `∧²𝔷`, the plane
/// areas `d_{2i-1}∧d_{2i}`, and for every pair with `L_j = εL_i` the two
/// bivectors `d_{2i-1}∧d_{2j-1} + ε d_{2i}∧d_{2j}` and
/// `d_{2i-1}∧d_{2j} + ε d_{2j-1}∧d_{2i}`.
///
/// Refuses matrices whose degeneracy criteria disagree.
pub fn lemma_inv_closed_form<S: Scalar>(g: &FlatLieAlgebra<S>) -> Result<SubspaceBasis<S>> {
    let report = g.classify();
    if let Some(pairs) = &report.anomaly {
        return Err(Error::Anomalous {
            detail: format!(
                "rows {} have equal squares but are not ±-proportional",
                pairs.iter().map(|(i, j)| format!("({i},{j})")).join(", ")
            ),
        });
    }
    let n = g.dim();
    let basis = WedgeBasis::new(n, 2);
    let mut gens: Vec<Multivector<S>> = Vec::new();
    for (i, j) in (1..=g.l0()).tuple_combinations() {
        gens.push(Multivector::term(n, &[g.z(i), g.z(j)], S::one()));
    }
    for i in 1..=g.m() {
        gens.push(Multivector::term(n, &[g.d(2 * i - 1), g.d(2 * i)], S::one()));
    }
    for &(i, j, eps) in &report.pairs {
        let e = S::from_i64(eps as i64);
        let mut a = Multivector::term(n, &[g.d(2 * i - 1), g.d(2 * j - 1)], S::one());
        a.add_wedge(&[g.d(2 * i), g.d(2 * j)], e.clone());
        let mut b = Multivector::term(n, &[g.d(2 * i - 1), g.d(2 * j)], S::one());
        b.add_wedge(&[g.d(2 * j - 1), g.d(2 * i)], e);
        gens.push(a);
        gens.push(b);
    }
    Ok(SubspaceBasis::from_vectors(
        basis.len(),
        gens.iter().map(|v| v.to_dense(&basis)).collect(),
    ))
}
