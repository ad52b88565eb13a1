//! Closed-form expressions compared against generic computations: three
//! displayed Jacobiators on `g*`, and the pairings `⟨ω, [r0, r1]⟩`.

use itertools::Itertools;
use serde::Serialize;

use crate::bialgebra::dual::{u_star, DualBracket};
use crate::bialgebra::schouten::schouten;
use crate::cohomology::{BivectorCoefficients, CoefficientView, Cochain, Decomposition, Target};
use crate::exteralg::Multivector;
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// The displayed Jacobiator formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JacobiatorForm {
    /// `J(s_i*, s_j*, d_{2k-1}*)`.
    SSDOdd,
    /// `J(s_i*, s_j*, d_{2k}*)`.
    SSDEven,
    /// `J(z_i*, z_j*, z_k*)`.
    ZZZ,
}

impl JacobiatorForm {
    pub const ALL: [JacobiatorForm; 3] = [Self::SSDOdd, Self::SSDEven, Self::ZZZ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::SSDOdd => "J(s_i*,s_j*,d_{2k-1}*)",
            Self::SSDEven => "J(s_i*,s_j*,d_{2k}*)",
            Self::ZZZ => "J(z_i*,z_j*,z_k*)",
        }
    }
}

/// Comparison of one closed form at one index tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct FormComparison<S> {
    pub form: JacobiatorForm,
    pub indices: (usize, usize, usize),
    pub generic: Multivector<S>,
    pub closed: Multivector<S>,
}

impl<S: Scalar> FormComparison<S> {
    pub fn agrees(&self) -> bool {
        self.generic == self.closed
    }
}

/// Outcome of one closed form over a batch of comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FormOutcome {
    /// Every comparison agreed.
    Match { checked: usize },
    /// Some comparison disagreed; the first one, written out.
    Finding { witness: String },
    /// No index tuple exists for this form.
    NotApplicable,
}

impl FormOutcome {
    /// Combine outcomes from several batches: a finding wins, match counts add.
    pub fn merge(self, other: FormOutcome) -> FormOutcome {
        use FormOutcome::*;
        match (self, other) {
            (f @ Finding { .. }, _) | (_, f @ Finding { .. }) => f,
            (Match { checked: a }, Match { checked: b }) => Match { checked: a + b },
            (m @ Match { .. }, NotApplicable) | (NotApplicable, m @ Match { .. }) => m,
            (NotApplicable, NotApplicable) => NotApplicable,
        }
    }
}

/// Summarize the comparisons for `form`.
pub fn form_outcome<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    comparisons: &[FormComparison<S>],
    form: JacobiatorForm,
) -> FormOutcome {
    let mut checked = 0;
    for c in comparisons.iter().filter(|c| c.form == form) {
        if !c.agrees() {
            return FormOutcome::Finding {
                witness: format!(
                    "{} at (i,j,k) = {:?}: generic {}, closed form {}",
                    form.name(),
                    c.indices,
                    g.format(&c.generic, true),
                    g.format(&c.closed, true)
                ),
            };
        }
        checked += 1;
    }
    if checked == 0 {
        FormOutcome::NotApplicable
    } else {
        FormOutcome::Match { checked }
    }
}

/// Evaluate every applicable closed-form Jacobiator for `ξ` with decomposition
/// `dec`. Forms without index tuples in this algebra (`k0 < 2`, or `l0 < 3`)
/// produce no comparisons.
pub fn jacobiator_forms<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    xi: &Cochain<S>,
    dec: &Decomposition<S>,
) -> Vec<FormComparison<S>> {
    let db = DualBracket::new(xi);
    let view = CoefficientView::new(g, xi);
    let r0 = BivectorCoefficients::new(g, &dec.r0);
    let mut out = Vec::new();
    for (i, j) in (1..=g.k0()).tuple_combinations() {
        for k in 1..=g.m() {
            let sup = view.at(Target::D(2 * k - 1));
            let odd = -r0.e(i, k) * sup.c(j, k) + r0.e(j, k) * sup.c(i, k)
                - r0.c(i, k) * sup.e(j, k)
                + r0.c(j, k) * sup.e(i, k);
            let even = -r0.c(j, k) * sup.c(i, k) + r0.e(j, k) * sup.e(i, k) + r0.c(i, k) * sup.c(j, k)
                - r0.e(i, k) * sup.e(j, k);
            let u = u_star(g, k);
            out.push(FormComparison {
                form: JacobiatorForm::SSDOdd,
                indices: (i, j, k),
                generic: db.jacobiator(g.s(i), g.s(j), g.d(2 * k - 1)),
                closed: u.scale(&odd),
            });
            out.push(FormComparison {
                form: JacobiatorForm::SSDEven,
                indices: (i, j, k),
                generic: db.jacobiator(g.s(i), g.s(j), g.d(2 * k)),
                closed: u.scale(&even),
            });
        }
    }
    let (k0, l0) = (g.k0(), g.l0());
    for (i, j, k) in (1..=l0).tuple_combinations() {
        let mut closed = Multivector::zero(g.dim(), 1);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for p in 1..=k0 {
                let v = (1..=l0).fold(S::zero(), |acc, l| {
                    acc + view.at(Target::S(p)).f(a, l) * view.at(Target::Z(l)).f(b, c)
                });
                closed.add_wedge(&[g.s(p)], v);
            }
            for p in 1..=l0 {
                let v = (1..=l0).fold(S::zero(), |acc, l| {
                    acc + view.at(Target::Z(p)).f(a, l) * view.at(Target::Z(l)).f(b, c)
                });
                closed.add_wedge(&[g.z(p)], v);
            }
        }
        out.push(FormComparison {
            form: JacobiatorForm::ZZZ,
            indices: (i, j, k),
            generic: db.jacobiator(g.z(i), g.z(j), g.z(k)),
            closed,
        });
    }
    out
}

/// One row of the `⟨ω, [r0, r1]⟩` table at one index choice.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingComparison<S> {
    /// Row number 1..=10.
    pub row: u8,
    pub omega: [usize; 3],
    pub direct: S,
    pub closed: S,
}

impl<S: Scalar> PairingComparison<S> {
    pub fn agrees(&self) -> bool {
        (self.direct.clone() - self.closed.clone()).is_negligible()
    }
}

/// Evaluate every row of the pairing table for `r0 ∈ 𝔷∧[g,g] ⊕ (⊕_{i<j} P_i∧P_j)`
/// and `r1 ∈ ∧²𝔰 ⊕ 𝔰∧𝔷`, against the direct Schouten bracket. The table
/// holds only when the `𝔰∧[g,g]` part of `r0` vanishes (`c = e = 0`); rows 1
/// and 2 pick up `B_j(k) c_ik`-type terms otherwise.
///
/// With `A_i(k) = Σ_p λ_pk a_ip` and `B_i(k) = Σ_p λ_pk b_pi` (from `r1`) and
/// `g, h, m, n, p` from `r0`, the rows are:
///
/// | row | ω                            | closed form                         |
/// |-----|------------------------------|-------------------------------------|
/// | 1   | `s_i z_j d_{2k-1}`           | `-A_i(k) h_jk`                      |
/// | 2   | `s_i z_j d_{2k}`             | `A_i(k) g_jk`                       |
/// | 3   | `z_i z_j d_{2k-1}`, `i<j`    | `B_i(k) h_jk - B_j(k) h_ik`         |
/// | 4   | `z_i z_j d_{2k}`, `i<j`      | `-B_i(k) g_jk + B_j(k) g_ik`        |
/// | 5   | `s_i d_{2j-1} d_{2k-1}`, `j<k` | `-A_i(k) n_jk + A_i(j) n_kj`      |
/// | 6   | `s_i d_{2j-1} d_{2k}`, `j≠k` | `A_i(k) m_jk - A_i(j) p_jk`         |
/// | 7   | `s_i d_{2j} d_{2k}`, `j<k`   | `A_i(j) n_jk - A_i(k) n_kj`         |
/// | 8   | `z_i d_{2j-1} d_{2k-1}`, `j<k` | `B_i(k) n_jk - B_i(j) n_kj`       |
/// | 9   | `z_i d_{2j-1} d_{2k}`, `j≠k` | `-B_i(k) m_jk + B_i(j) p_jk`        |
/// | 10  | `z_i d_{2j} d_{2k}`, `j<k`   | `-B_i(j) n_jk + B_i(k) n_kj`        |
pub fn pairing_table<S: Scalar>(
    g: &FlatLieAlgebra<S>,
    r0: &Multivector<S>,
    r1: &Multivector<S>,
) -> Vec<PairingComparison<S>> {
    let bracket = schouten(g, r0, r1);
    let c0 = BivectorCoefficients::new(g, r0);
    let c1 = BivectorCoefficients::new(g, r1);
    let (k0, l0, m) = (g.k0(), g.l0(), g.m());
    let a = |i: usize, k: usize| {
        (1..=k0).fold(S::zero(), |acc, p| acc + g.lam(p, k).clone() * c1.a(i, p))
    };
    let b = |i: usize, k: usize| {
        (1..=k0).fold(S::zero(), |acc, p| acc + g.lam(p, k).clone() * c1.b(p, i))
    };
    let mut out = Vec::new();
    let mut push = |row: u8, omega: [usize; 3], closed: S| {
        out.push(PairingComparison {
            row,
            omega,
            direct: bracket.coeff(&omega),
            closed,
        });
    };
    let (s, z, d) = (|i| g.s(i), |i| g.z(i), |i| g.d(i));
    for k in 1..=m {
        for i in 1..=k0 {
            for j in 1..=l0 {
                push(1, [s(i), z(j), d(2 * k - 1)], -a(i, k) * c0.h(j, k));
                push(2, [s(i), z(j), d(2 * k)], a(i, k) * c0.g(j, k));
            }
        }
        for (i, j) in (1..=l0).tuple_combinations() {
            push(3, [z(i), z(j), d(2 * k - 1)], b(i, k) * c0.h(j, k) - b(j, k) * c0.h(i, k));
            push(4, [z(i), z(j), d(2 * k)], -b(i, k) * c0.g(j, k) + b(j, k) * c0.g(i, k));
        }
    }
    for (j, k) in (1..=m).cartesian_product(1..=m).filter(|(j, k)| j != k) {
        let lt = j < k;
        for i in 1..=k0 {
            if lt {
                push(5, [s(i), d(2 * j - 1), d(2 * k - 1)], -a(i, k) * c0.n(j, k) + a(i, j) * c0.n(k, j));
                push(7, [s(i), d(2 * j), d(2 * k)], a(i, j) * c0.n(j, k) - a(i, k) * c0.n(k, j));
            }
            push(6, [s(i), d(2 * j - 1), d(2 * k)], a(i, k) * c0.m(j, k) - a(i, j) * c0.p(j, k));
        }
        for i in 1..=l0 {
            if lt {
                push(8, [z(i), d(2 * j - 1), d(2 * k - 1)], b(i, k) * c0.n(j, k) - b(i, j) * c0.n(k, j));
                push(10, [z(i), d(2 * j), d(2 * k)], -b(i, j) * c0.n(j, k) + b(i, k) * c0.n(k, j));
            }
            push(9, [z(i), d(2 * j - 1), d(2 * k)], -b(i, k) * c0.m(j, k) + b(i, j) * c0.p(j, k));
        }
    }
    out
}
