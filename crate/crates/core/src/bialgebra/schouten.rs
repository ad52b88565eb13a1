use itertools::Itertools;

use crate::exteralg::{Multivector, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// `μ(X_1 ∧ … ∧ X_k) = Σ_{i<j} (-1)^{i+j} [X_i, X_j] ∧ X_1 ∧ … X̂_i … X̂_j … ∧ X_k`
/// (positions counted from 1), extended linearly.
pub fn mu<S: Scalar>(g: &FlatLieAlgebra<S>, x: &Multivector<S>) -> Multivector<S> {
    let k = x.degree();
    assert!(k >= 1, "mu needs degree at least 1");
    let mut out = Multivector::zero(g.dim(), k - 1);
    let mut buf = Vec::with_capacity(k);
    for (blade, c) in x.terms() {
        let idx = blade.indices();
        for (a, b) in (0..k).tuple_combinations() {
            let br = g.bracket_basis(idx[a], idx[b]);
            if br.is_zero() {
                continue;
            }
            // 0-based a + b has the same parity as 1-based (a+1) + (b+1)
            let sign = if (a + b) % 2 == 0 { c.clone() } else { -c.clone() };
            for (w, cw) in br.terms() {
                buf.clear();
                buf.push(w.indices()[0]);
                buf.extend(
                    idx.iter()
                        .enumerate()
                        .filter(|&(p, _)| p != a && p != b)
                        .map(|(_, &i)| i),
                );
                out.add_wedge(&buf, sign.clone() * cw.clone());
            }
        }
    }
    out
}

/// Schouten bracket of two bivectors through the pairing identity
/// `⟨ω, [X,Y]⟩ = ω(μ(X∧Y)) − ⟨i_Y ω, μ(X)⟩ − ⟨i_X ω, μ(Y)⟩`,
/// evaluated on every basis 3-form `ω`.
pub fn schouten<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    x: &Multivector<S>,
    y: &Multivector<S>,
) -> Multivector<S> {
    assert!(x.degree() == 2 && y.degree() == 2, "bivectors expected");
    let n = g.dim();
    let mu_xy = mu(g, &x.wedge_unchecked(y));
    let (mu_x, mu_y) = (mu(g, x), mu(g, y));
    let mut out = Multivector::zero(n, 3);
    for blade in WedgeBasis::new(n, 3).blades() {
        let omega = Multivector::term(n, blade.indices(), S::one());
        let value = mu_xy.get(blade)
            - omega.contract(y).expect("degrees").pairing(&mu_x).expect("degrees")
            - omega.contract(x).expect("degrees").pairing(&mu_y).expect("degrees");
        out.add_term(blade.clone(), value);
    }
    out
}

/// Independent Schouten bracket: bilinear extension of
/// `[x∧y, u∧v] = [x,u]∧y∧v − [x,v]∧y∧u − [y,u]∧x∧v + [y,v]∧x∧u`.
pub fn schouten_oracle<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    x: &Multivector<S>,
    y: &Multivector<S>,
) -> Multivector<S> {
    assert!(x.degree() == 2 && y.degree() == 2, "bivectors expected");
    let n = g.dim();
    let mut out = Multivector::zero(n, 3);
    for (bx, cx) in x.terms() {
        for (by, cy) in y.terms() {
            let (a, b) = (bx.indices()[0], bx.indices()[1]);
            let (u, v) = (by.indices()[0], by.indices()[1]);
            let c = cx.clone() * cy.clone();
            let terms = [
                (a, u, b, v, c.clone()),
                (a, v, b, u, -c.clone()),
                (b, u, a, v, -c.clone()),
                (b, v, a, u, c.clone()),
            ];
            for (p, q, r, s, sign) in terms {
                for (w, cw) in g.bracket_basis(p, q).terms() {
                    out.add_wedge(&[w.indices()[0], r, s], sign.clone() * cw.clone());
                }
            }
        }
    }
    out
}
