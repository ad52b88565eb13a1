//! One function per subcommand. Each returns a [`Report`]; input problems are
//! [`InputError`]s and never reach a report.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use flatbialg::bialgebra::{
    case_filter, derived_series_dims, is_bialgebra, schouten, schouten_oracle, CybeClassifier,
    DualBracket,
};
use flatbialg::cohomology::{
    check_tables, coboundary_space, cocycle_space, cocycle_space_dense, coefficient_relations,
    invariants, lemma_inv_closed_form, Decomposer,
};
use flatbialg::exteralg::WedgeBasis;
use flatbialg::verify::{self, Case, Verdict};
use flatbialg::{Algebra, CochainQ, MultivectorQ, SubspaceQ};
use serde_json::{json, Value};

use crate::files::{cochain_file, invalid, multivector_entries, AlgebraFile, InputError, InputResult};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Nullspace,
    ClosedForm,
    Both,
}

fn check_mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn same_space(a: &SubspaceQ, b: &SubspaceQ) -> bool {
    a.dim() == b.dim() && a.is_subspace_of(b) && b.is_subspace_of(a)
}

fn basis_entries(g: &Algebra, space: &SubspaceQ, degree: usize) -> Vec<BTreeMap<String, String>> {
    let basis = WedgeBasis::new(g.dim(), degree);
    space
        .vectors()
        .iter()
        .map(|v| multivector_entries(g, &MultivectorQ::from_dense(&basis, v)))
        .collect()
}

fn cochain_entries(g: &Algebra, xi: &CochainQ) -> BTreeMap<String, BTreeMap<String, String>> {
    cochain_file(g, xi).entries
}

fn residual_witness(g: &Algebra, xi: &CochainQ) -> Option<String> {
    xi.first_violation(g).map(|((x, y), r)| {
        format!(
            "ξ([{x},{y}]) - ad_{x} ξ({y}) + ad_{y} ξ({x}) = {}",
            g.format(&r, false),
            x = g.basis_name(x),
            y = g.basis_name(y),
        )
    })
}

fn write_basis(path: &Path, g: &Algebra, space: &SubspaceQ) -> InputResult<()> {
    let files: Vec<_> = space
        .vectors()
        .iter()
        .map(|v| cochain_file(g, &CochainQ::from_flat(g.dim(), v)))
        .collect();
    let mut text = serde_json::to_string_pretty(&files).expect("plain data");
    text.push('\n');
    fs::write(path, text).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn info(g: &Algebra) -> Report {
    let deg = g.classify();
    let jacobi = g.jacobi_violation();
    let trace = g.trace_violation();
    let curvature = g.curvature_violation();
    let names = |t: (usize, usize, usize)| {
        format!("({}, {}, {})", g.basis_name(t.0), g.basis_name(t.1), g.basis_name(t.2))
    };
    let flat = curvature.is_none();
    let pairs: Vec<String> = deg
        .pairs
        .iter()
        .map(|&(i, j, e)| format!("({i},{j},ε={})", if e < 0 { "−1" } else { "1" }))
        .collect();
    let kind = if let Some(bad) = &deg.anomaly {
        let rows: Vec<String> = bad.iter().map(|(i, j)| format!("({i},{j})")).collect();
        format!("anomalous degeneracy, rows: {}", rows.join(", "))
    } else if deg.nondegenerate {
        "nondegenerate".to_string()
    } else {
        format!("degenerate, pairs: {}", pairs.join(", "))
    };
    let summary = format!("{kind}, dim {}, flat {}", g.dim(), check_mark(flat));
    let verdict = if deg.anomaly.is_some() {
        Verdict::Anomaly
    } else if flat && jacobi.is_none() && trace.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let data = json!({
        "summary": summary,
        "algebra": AlgebraFile::from_algebra(g),
        "dim": g.dim(),
        "k0": g.k0(),
        "l0": g.l0(),
        "m": g.m(),
        "basis": (0..g.dim()).map(|x| g.basis_name(x)).collect::<Vec<_>>(),
        "degeneracy": {
            "nondegenerate": deg.nondegenerate,
            "pairs": deg.pairs.iter().map(|&(i, j, e)| json!({"i": i, "j": j, "epsilon": e})).collect::<Vec<_>>(),
            "anomaly": deg.anomaly.as_ref().map(|v| v.iter().map(|&(i, j)| json!({"i": i, "j": j})).collect::<Vec<_>>()),
        },
        "jacobi": {"holds": jacobi.is_none(), "witness": jacobi.map(names)},
        "unimodular": {"holds": trace.is_none(), "witness": trace.map(|x| g.basis_name(x))},
        "flat": {"holds": flat, "witness": curvature.map(names)},
    });
    Report::new("info", verdict, data)
}

pub fn invariants_cmd(g: &Algebra, degree: usize, mode: Option<Mode>) -> InputResult<Report> {
    let mode = mode.unwrap_or(if degree == 2 { Mode::Both } else { Mode::Nullspace });
    if degree != 2 && mode != Mode::Nullspace {
        return Err(invalid("--mode", "the closed form describes degree 2 only"));
    }
    let mut data = BTreeMap::new();
    data.insert("degree", json!(degree));
    let nullspace = (mode != Mode::ClosedForm).then(|| invariants(g, degree).expect("degree 2 or 3"));
    if let Some(sp) = &nullspace {
        data.insert("nullspace", json!({"dim": sp.dim(), "basis": basis_entries(g, sp, degree)}));
    }
    let closed = if mode == Mode::Nullspace {
        None
    } else {
        match lemma_inv_closed_form(g) {
            Ok(sp) => {
                data.insert("closed_form", json!({"dim": sp.dim(), "basis": basis_entries(g, &sp, 2)}));
                Some(sp)
            }
            Err(e) => {
                data.insert("closed_form", json!({"anomaly": e.to_string()}));
                data.insert("summary", json!(format!("anomaly: {e}")));
                return Ok(Report::new("invariants", Verdict::Anomaly, json!(data)));
            }
        }
    };
    let (verdict, summary) = match (&nullspace, &closed) {
        (Some(a), Some(b)) => {
            let equal = same_space(a, b);
            data.insert("equal", json!(equal));
            let verdict = if equal { Verdict::Pass } else { Verdict::Fail };
            let dims = if equal {
                format!("dim {}", a.dim())
            } else {
                format!("dims {} (nullspace) vs {} (closed form)", a.dim(), b.dim())
            };
            (verdict, format!("{dims}, equal {}", check_mark(equal)))
        }
        (Some(a), None) | (None, Some(a)) => (Verdict::Pass, format!("dim {}", a.dim())),
        (None, None) => unreachable!("some mode is selected"),
    };
    data.insert("summary", json!(summary));
    Ok(Report::new("invariants", verdict, json!(data)))
}

pub fn cocycles(g: &Algebra, basis_out: Option<&Path>) -> InputResult<Report> {
    let z = cocycle_space(g);
    let dense = cocycle_space_dense(g);
    let b = coboundary_space(g);
    let agree = same_space(&z, &dense);
    let closed = b.is_subspace_of(&z);
    if let Some(path) = basis_out {
        write_basis(path, g, &z)?;
    }
    let verdict = if agree && closed {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let data = json!({
        "summary": format!("dims ({}, {}), H¹ dim {}", z.dim(), b.dim(), z.dim() - b.dim()),
        "cocycle_dim": z.dim(),
        "cocycle_dim_dense": dense.dim(),
        "assembly_paths_agree": agree,
        "coboundary_dim": b.dim(),
        "coboundaries_are_cocycles": closed,
        "h1_dim": z.dim() - b.dim(),
    });
    Ok(Report::new("cocycles", verdict, data))
}

pub fn coboundaries(g: &Algebra, basis_out: Option<&Path>) -> InputResult<Report> {
    let b = coboundary_space(g);
    let all = WedgeBasis::new(g.dim(), 2).len();
    let inv = invariants(g, 2).expect("degree 2");
    let rank_nullity = all - inv.dim();
    let z = cocycle_space(g);
    if let Some(path) = basis_out {
        write_basis(path, g, &b)?;
    }
    let agree = b.dim() == rank_nullity;
    let closed = b.is_subspace_of(&z);
    let verdict = if agree && closed {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let data = json!({
        "summary": format!("dims ({}, {}), H¹ dim {}", z.dim(), b.dim(), z.dim() - b.dim()),
        "coboundary_dim": b.dim(),
        "coboundary_dim_rank_nullity": rank_nullity,
        "paths_agree": agree,
        "cocycle_dim": z.dim(),
        "coboundaries_are_cocycles": closed,
        "h1_dim": z.dim() - b.dim(),
    });
    Ok(Report::new("coboundaries", verdict, data))
}

pub fn decompose(g: &Algebra, xi: &CochainQ) -> Report {
    if let Some(w) = residual_witness(g, xi) {
        let data = json!({"summary": format!("not a cocycle: {w}"), "cocycle": false, "witness": w});
        return Report::new("decompose", Verdict::Fail, data);
    }
    let decomposer = Decomposer::new(g);
    let dec = match decomposer.decompose(xi) {
        Ok(d) => d,
        Err(e) => {
            let data = json!({"summary": e.to_string(), "cocycle": true, "error": e.to_string()});
            return Report::new("decompose", Verdict::Fail, data);
        }
    };
    let check = decomposer.verify(xi, &dec);
    let relations = coefficient_relations(g, xi);
    let nondegenerate = g.classify().nondegenerate;
    let mut verdict = if check.passed() && relations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let tables = if nondegenerate {
        let t = check_tables(g, &dec.r);
        if !t.anomalies.is_empty() || !t.overlaps.is_empty() {
            verdict = Verdict::all([verdict, Verdict::Anomaly]);
        } else if !t.passed() {
            verdict = Verdict::Fail;
        }
        json!({
            "checked": t.checks.len(),
            "failures": t.failures().map(|c| format!("table {} ({},{},{:?}) {}: {}", c.table, c.i, c.j, c.ell, c.case, c.relation)).collect::<Vec<_>>(),
            "anomalies": t.anomalies,
            "overlaps": t.overlaps,
        })
    } else {
        json!("not applicable: degenerate algebra")
    };
    let mut parts = vec![format!("r0 = {}", g.format(&dec.r0, false))];
    let nonzero: Vec<usize> = (0..g.dim()).filter(|&x| !dec.r.value(x).is_zero()).collect();
    if nonzero.is_empty() {
        parts.push("R = 0".into());
    }
    for x in nonzero {
        parts.push(format!("R({}) = {}", g.basis_name(x), g.format(dec.r.value(x), false)));
    }
    let data = json!({
        "summary": parts.join("; "),
        "cocycle": true,
        "r0": multivector_entries(g, &dec.r0),
        "r": cochain_entries(g, &dec.r),
        "r_is_zero": dec.r.is_zero(),
        "phi": dec.phi.iter().map(|p| multivector_entries(g, p)).collect::<Vec<_>>(),
        "check": {
            "sum": check.sum,
            "invariant_on_abelian_part": check.invariant_on_abelian_part,
            "phi": check.phi,
            "r0_in_complement": check.r0_in_complement,
        },
        "coefficient_relations": relations,
        "tables": tables,
    });
    Report::new("decompose", verdict, data)
}

pub fn check_bialgebra(g: &Algebra, xi: &CochainQ) -> Report {
    let report = is_bialgebra(g, xi);
    if !report.cocycle {
        let w = residual_witness(g, xi).expect("gate failed on some pair");
        let data = json!({"summary": format!("not a cocycle: {w}"), "cocycle": false, "witness": w});
        return Report::new("check-bialgebra", Verdict::Fail, data);
    }
    let db = DualBracket::new(xi);
    let dual = |i: usize| format!("{}*", g.basis_name(i));
    let violations: Vec<String> = report
        .violations
        .iter()
        .map(|v| {
            let (a, b, c) = v.triple;
            format!(
                "J({},{},{}) = {}",
                dual(a),
                dual(b),
                dual(c),
                g.format(&db.jacobiator(a, b, c), true)
            )
        })
        .collect();
    let series = derived_series_dims(&db);
    let mut verdict = if report.passed() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let cases = if g.classify().nondegenerate {
        match case_filter(g, xi) {
            Ok(cf) => {
                if report.passed() && !cf.passed() {
                    verdict = Verdict::Anomaly;
                }
                json!({"passed": cf.passed(), "planes": cf.planes})
            }
            Err(e) => json!({"error": e.to_string()}),
        }
    } else {
        json!("not applicable: degenerate algebra")
    };
    let summary = match (verdict, violations.first()) {
        (Verdict::Pass, _) => "Lie bialgebra ✓".to_string(),
        (Verdict::Anomaly, _) => "Lie bialgebra, but the plane case filter rejects it".to_string(),
        (_, Some(w)) => format!("not a Lie bialgebra: {w}"),
        (_, None) => "not a Lie bialgebra".to_string(),
    };
    let data = json!({
        "summary": summary,
        "cocycle": true,
        "jacobi_violations": violations,
        "witness": violations.first(),
        "dual_derived_series": series,
        "dual_solvable": series.last() == Some(&0),
        "case_filter": cases,
    });
    Report::new("check-bialgebra", verdict, data)
}

pub fn schouten_cmd(g: &Algebra, rs: &[MultivectorQ]) -> InputResult<Report> {
    let (x, y) = match rs {
        [x] => (x, x),
        [x, y] => (x, y),
        _ => return Err(invalid("-r", "give one or two bivector files")),
    };
    let direct = schouten(g, x, y);
    let oracle = schouten_oracle(g, x, y);
    let agree = direct == oracle;
    let data = json!({
        "summary": format!("[r1,r2] = {}, oracle {}", g.format(&direct, false), check_mark(agree)),
        "bracket": multivector_entries(g, &direct),
        "oracle": multivector_entries(g, &oracle),
        "oracle_agrees": agree,
    });
    let verdict = if agree { Verdict::Pass } else { Verdict::Fail };
    Ok(Report::new("schouten", verdict, data))
}

pub fn cybe(g: &Algebra, r: &MultivectorQ) -> Report {
    let classifier = CybeClassifier::new(g);
    let v = classifier.classify(r);
    let oracle = schouten_oracle(g, r, r);
    let agree = v.bracket_square == oracle;
    let data = json!({
        "summary": format!("{}, [r,r] = {}", v.class.as_str(), g.format(&v.bracket_square, false)),
        "class": v.class,
        "bracket_square": multivector_entries(g, &v.bracket_square),
        "oracle_agrees": agree,
        "invariant_trivectors_dim": classifier.invariants().dim(),
    });
    let verdict = if agree { Verdict::Pass } else { Verdict::Fail };
    Report::new("cybe", verdict, data)
}

pub fn verify_paper(selection: &str) -> InputResult<Report> {
    let cases = Case::parse_selection(selection).map_err(|e| invalid("--case", e.to_string()))?;
    let suite = verify::run(&cases);
    let summary = suite
        .cases
        .iter()
        .map(|c| format!("{} {}", c.name, c.verdict))
        .collect::<Vec<_>>()
        .join(", ");
    let mut data = serde_json::to_value(&suite).expect("plain data");
    if let Value::Object(map) = &mut data {
        map.insert("summary".into(), json!(summary));
    }
    Ok(Report::new("verify-paper", suite.verdict, data))
}
