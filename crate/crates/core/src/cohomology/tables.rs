//! Checker for the coefficient relations the decomposition theorem imposes on
//! `R` restricted to `[g,g]`.
//!
//! For planes `i < j` and `ℓ ∉ {i, j}` the relations among
//! `m_ij, p_ij, n_ij, n_ji` at superscripts `(2ℓ-1), (2ℓ)` depend on whether
//! `L_ℓ = ±L_j + εL_i` ("table 1"); at superscripts `(2i-1), (2i), (2j-1), (2j)`
//! they depend on whether `L_i = 2εL_j` or `L_j = 2εL_i` ("table 2").

use itertools::Itertools;
use serde::Serialize;

use crate::cohomology::coefficients::{CoefficientView, Target};
use crate::cohomology::cochain::Cochain;
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// One asserted identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub table: u8,
    pub i: usize,
    pub j: usize,
    pub ell: Option<usize>,
    pub case: String,
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub checks: Vec<TableCheck>,
    /// Row configurations the case analysis declares impossible.
    pub anomalies: Vec<String>,
    /// Overlapping table-2 cases (both `L_i = 2εL_j` and `L_j = 2ε'L_i`).
    pub overlaps: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.anomalies.is_empty() && self.overlaps.is_empty() && self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TableCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// The four coefficient families of one `R(d_q)` for a pair `i < j`.
struct Quad<S> {
    m: S,
    p: S,
    nij: S,
    nji: S,
}

struct Recorder<'a, S> {
    report: &'a mut TableReport,
    table: u8,
    i: usize,
    j: usize,
    ell: Option<usize>,
    case: String,
    _marker: std::marker::PhantomData<S>,
}

impl<S: Scalar> Recorder<'_, S> {
    fn eq(&mut self, relation: String, lhs: S, rhs: S) {
        self.report.checks.push(TableCheck {
            table: self.table,
            i: self.i,
            j: self.j,
            ell: self.ell,
            case: self.case.clone(),
            relation,
            holds: (lhs - rhs).is_negligible(),
        });
    }

    fn zeros(&mut self, q: usize, v: &Quad<S>) {
        let (i, j) = (self.i, self.j);
        for (name, x) in [("m", &v.m), ("p", &v.p), ("n", &v.nij)] {
            self.eq(format!("{name}_{i}{j}^({q}) = 0"), x.clone(), S::zero());
        }
        self.eq(format!("n_{j}{i}^({q}) = 0"), v.nji.clone(), S::zero());
    }
}

/// Run every table relation on `r` (normally the `R` of a decomposition).
pub fn check_tables<S: Scalar>(g: &FlatLieAlgebra<S>, r: &Cochain<S>) -> TableReport {
    let view = CoefficientView::new(g, r);
    let quad = |q: usize, i: usize, j: usize| {
        let v = view.at(Target::D(q));
        Quad {
            m: v.m(i, j),
            p: v.p(i, j),
            nij: v.n(i, j),
            nji: v.n(j, i),
        }
    };
    let row = |k: usize| g.lambda().row(k);
    let mut report = TableReport::default();
    let m = g.m();

    for (i, j) in (1..=m).tuple_combinations() {
        for ell in (1..=m).filter(|&l| l != i && l != j) {
            let plus = sign_with(row(ell), row(j), row(i), 1);
            let minus = sign_with(row(ell), row(j), row(i), -1);
            if plus.is_some() && minus.is_some() {
                report.anomalies.push(format!(
                    "L_{ell} = L_{j} + εL_{i} and L_{ell} = -L_{j} + ε'L_{i} both hold"
                ));
                continue;
            }
            let (o, t) = (2 * ell - 1, 2 * ell);
            let (vo, vt) = (quad(o, i, j), quad(t, i, j));
            let case = match (plus, minus) {
                (Some(e), _) => format!("L_{ell} = L_{j} + ({e})L_{i}"),
                (_, Some(e)) => format!("L_{ell} = -L_{j} + ({e})L_{i}"),
                _ => "generic".to_string(),
            };
            let mut rec = Recorder {
                report: &mut report,
                table: 1,
                i,
                j,
                ell: Some(ell),
                case,
                _marker: std::marker::PhantomData,
            };
            match (plus, minus) {
                (Some(e), _) => {
                    let e = S::from_i64(e);
                    let ne = -e.clone();
                    rec.eq(format!("p_{i}{j}^({o}) = -ε m_{i}{j}^({o})"), vo.p.clone(), ne.clone() * vo.m.clone());
                    rec.eq(format!("m_{i}{j}^({o}) = n_{i}{j}^({t})"), vo.m.clone(), vt.nij.clone());
                    rec.eq(format!("p_{i}{j}^({t}) = -ε m_{i}{j}^({t})"), vt.p.clone(), ne.clone() * vt.m.clone());
                    rec.eq(format!("-ε m_{i}{j}^({t}) = ε n_{i}{j}^({o})"), ne.clone() * vt.m.clone(), e.clone() * vo.nij.clone());
                    rec.eq(format!("n_{j}{i}^({o}) = -ε n_{i}{j}^({o})"), vo.nji.clone(), ne.clone() * vo.nij.clone());
                    rec.eq(format!("n_{j}{i}^({t}) = -ε n_{i}{j}^({t})"), vt.nji.clone(), ne * vt.nij.clone());
                }
                (_, Some(e)) => {
                    let e = S::from_i64(e);
                    rec.eq(format!("p_{i}{j}^({o}) = ε m_{i}{j}^({o})"), vo.p.clone(), e.clone() * vo.m.clone());
                    rec.eq(format!("m_{i}{j}^({o}) = n_{i}{j}^({t})"), vo.m.clone(), vt.nij.clone());
                    rec.eq(format!("p_{i}{j}^({t}) = ε m_{i}{j}^({t})"), vt.p.clone(), e.clone() * vt.m.clone());
                    rec.eq(format!("ε m_{i}{j}^({t}) = -ε n_{i}{j}^({o})"), e.clone() * vt.m.clone(), -e.clone() * vo.nij.clone());
                    rec.eq(format!("n_{j}{i}^({o}) = ε n_{i}{j}^({o})"), vo.nji.clone(), e.clone() * vo.nij.clone());
                    rec.eq(format!("n_{j}{i}^({t}) = ε n_{i}{j}^({t})"), vt.nji.clone(), e * vt.nij.clone());
                }
                _ => {
                    rec.zeros(o, &vo);
                    rec.zeros(t, &vt);
                }
            }
        }

        let b = double_sign(row(i), row(j));
        let c = double_sign(row(j), row(i));
        if let (Some(eb), Some(ec)) = (b, c) {
            report.overlaps.push(format!(
                "L_{i} = 2({eb})L_{j} and L_{j} = 2({ec})L_{i} both hold"
            ));
            continue;
        }
        let (oi, ti, oj, tj) = (2 * i - 1, 2 * i, 2 * j - 1, 2 * j);
        let (vi_o, vi_t, vj_o, vj_t) = (quad(oi, i, j), quad(ti, i, j), quad(oj, i, j), quad(tj, i, j));
        let case = match (b, c) {
            (Some(e), _) => format!("L_{i} = 2({e})L_{j}"),
            (_, Some(e)) => format!("L_{j} = 2({e})L_{i}"),
            _ => "generic".to_string(),
        };
        let mut rec = Recorder {
            report: &mut report,
            table: 2,
            i,
            j,
            ell: None,
            case,
            _marker: std::marker::PhantomData,
        };
        match (b, c) {
            (Some(e), _) => {
                let e = S::from_i64(e);
                rec.zeros(oi, &vi_o);
                rec.zeros(ti, &vi_t);
                let (o, t) = (oj, tj);
                rec.eq(format!("p_{i}{j}^({o}) = -ε n_{i}{j}^({t})"), vj_o.p.clone(), -e.clone() * vj_t.nij.clone());
                rec.eq(format!("m_{i}{j}^({o}) = -n_{i}{j}^({t})"), vj_o.m.clone(), -vj_t.nij.clone());
                rec.eq(format!("p_{i}{j}^({t}) = ε n_{i}{j}^({o})"), vj_t.p.clone(), e.clone() * vj_o.nij.clone());
                rec.eq(format!("m_{i}{j}^({t}) = n_{i}{j}^({o})"), vj_t.m.clone(), vj_o.nij.clone());
                rec.eq(format!("n_{j}{i}^({o}) = ε n_{i}{j}^({o})"), vj_o.nji.clone(), e.clone() * vj_o.nij.clone());
                rec.eq(format!("n_{j}{i}^({t}) = ε n_{i}{j}^({t})"), vj_t.nji.clone(), e * vj_t.nij.clone());
            }
            (_, Some(e)) => {
                let e = S::from_i64(e);
                let (o, t) = (oi, ti);
                rec.eq(format!("p_{i}{j}^({o}) = n_{i}{j}^({t})"), vi_o.p.clone(), vi_t.nij.clone());
                rec.eq(format!("m_{i}{j}^({o}) = ε n_{i}{j}^({t})"), vi_o.m.clone(), e.clone() * vi_t.nij.clone());
                rec.eq(format!("p_{i}{j}^({t}) = -n_{i}{j}^({o})"), vi_t.p.clone(), -vi_o.nij.clone());
                rec.eq(format!("m_{i}{j}^({t}) = -ε n_{i}{j}^({o})"), vi_t.m.clone(), -e.clone() * vi_o.nij.clone());
                rec.eq(format!("n_{j}{i}^({o}) = ε n_{i}{j}^({o})"), vi_o.nji.clone(), e.clone() * vi_o.nij.clone());
                rec.eq(format!("n_{j}{i}^({t}) = ε n_{i}{j}^({t})"), vi_t.nji.clone(), e * vi_t.nij.clone());
                rec.zeros(oj, &vj_o);
                rec.zeros(tj, &vj_t);
            }
            _ => {
                rec.zeros(oi, &vi_o);
                rec.zeros(ti, &vi_t);
                rec.zeros(oj, &vj_o);
                rec.zeros(tj, &vj_t);
            }
        }
    }

    for ell in 1..=m {
        for i in 1..=m {
            for q in [2 * ell - 1, 2 * ell] {
                let v = view.at(Target::D(q)).n(i, i);
                report.checks.push(TableCheck {
                    table: 0,
                    i,
                    j: i,
                    ell: Some(ell),
                    case: "all".to_string(),
                    relation: format!("n_{i}{i}^({q}) = 0"),
                    holds: v.is_negligible(),
                });
            }
        }
    }
    report
}

/// `Some(ε)` with `target = sign·base + ε·other`.
fn sign_with<S: Scalar>(target: &[S], base: &[S], other: &[S], sign: i64) -> Option<i64> {
    [1, -1].into_iter().find(|&e| {
        target
            .iter()
            .zip(base)
            .zip(other)
            .all(|((t, b), o)| {
                (t.clone() - S::from_i64(sign) * b.clone() - S::from_i64(e) * o.clone()).is_negligible()
            })
    })
}

/// `Some(ε)` with `a = 2ε b`.
fn double_sign<S: Scalar>(a: &[S], b: &[S]) -> Option<i64> {
    crate::flatliealg::row_multiple(b, a, &[2, -2]).map(|c| c / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cocycle_space, Decomposer};
    use crate::Rational;

    fn run(rows: &[&[i64]]) -> Vec<TableReport> {
        let g = FlatLieAlgebra::<Rational>::from_ints(1, 0, rows).unwrap();
        let dec = Decomposer::new(&g);
        cocycle_space(&g)
            .vectors()
            .iter()
            .map(|v| {
                let xi = Cochain::from_flat(g.dim(), v);
                check_tables(&g, &dec.decompose(&xi).unwrap().r)
            })
            .collect()
    }

    #[test]
    fn vacuous_for_one_plane() {
        for rep in run(&[&[1]]) {
            assert!(rep.passed());
            assert!(rep.checks.iter().all(|c| c.table == 0));
        }
    }

    #[test]
    fn generic_and_doubled_rows() {
        for rep in run(&[&[1], &[3]]) {
            assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
            assert!(rep.checks.iter().any(|c| c.table == 2 && c.case == "generic"));
        }
        for rep in run(&[&[1], &[2]]) {
            assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
            assert!(rep.checks.iter().any(|c| c.case == "L_2 = 2(1)L_1"));
        }
    }
}
