//! The verification suite: every checkable claim about the built-in algebras,
//! grouped into named cases. Results are deterministic: random draws use fixed
//! per-claim seeds and cases are sorted by name before they are returned.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bialgebra::{
    case_filter_with, derived_series_dims, form_outcome, is_bialgebra, jacobiator_forms,
    module_component, pairing_table, schouten, schouten_oracle, CybeClass, CybeClassifier,
    DualBracket, ExactnessSolver, FormOutcome, JacobiatorForm,
};
use crate::cohomology::{
    check_tables, coboundary, coboundary_space, cocycle_space, cocycle_space_dense,
    in_complement, invariants, lemma_inv_closed_form, Cochain, Decomposer,
};
use crate::error::{Error, Result};
use crate::exteralg::{Multivector, SubspaceBasis, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::sample;
use crate::scalar::Scalar;
use crate::zoo::{zoo, ZooAlgebra};
use crate::Rational;

type Q = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Anomaly,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Anomaly => "anomaly",
        }
    }

    /// Aggregate: any failure fails, otherwise any anomaly is an anomaly.
    pub fn all(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().fold(Verdict::Pass, |acc, v| match (acc, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Anomaly, _) | (_, Verdict::Anomaly) => Verdict::Anomaly,
            _ => Verdict::Pass,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub name: String,
    pub verdict: Verdict,
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub verdict: Verdict,
    pub cases: Vec<CaseResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    Dim3,
    Dim4,
    Lemma,
    Theorem,
    SchoutenTable,
    JacobiatorForms,
}

impl Case {
    pub const ALL: [Case; 6] = [
        Case::Dim3,
        Case::Dim4,
        Case::Lemma,
        Case::Theorem,
        Case::SchoutenTable,
        Case::JacobiatorForms,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Case::Dim3 => "dim3",
            Case::Dim4 => "dim4",
            Case::Lemma => "lemma",
            Case::Theorem => "theorem",
            Case::SchoutenTable => "schouten-table",
            Case::JacobiatorForms => "jacobiator-forms",
        }
    }

    /// `all` or a single case name.
    pub fn parse_selection(s: &str) -> Result<Vec<Case>> {
        if s == "all" {
            Ok(Case::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Case> {
        Case::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCase(s.into()))
    }
}

/// Run the selected cases in parallel.
pub fn run(cases: &[Case]) -> SuiteReport {
    let mut results: Vec<CaseResult> = cases.iter().unique().collect_vec().par_iter().map(|c| run_case(**c)).collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    SuiteReport {
        verdict: Verdict::all(results.iter().map(|c| c.verdict)),
        cases: results,
    }
}

pub fn run_case(case: Case) -> CaseResult {
    let claims = match case {
        Case::Dim3 => dim3_claims(),
        Case::Dim4 => dim4_claims(),
        Case::Lemma => lemma_claims(),
        Case::Theorem => theorem_claims(),
        Case::SchoutenTable => schouten_claims(),
        Case::JacobiatorForms => jacobiator_claims(),
    };
    CaseResult {
        name: case.name().into(),
        verdict: Verdict::all(claims.iter().map(|c| c.verdict)),
        claims,
    }
}

fn claim(name: impl Into<String>, ok: bool, detail: impl Into<String>, witness: Option<String>) -> Claim {
    Claim {
        name: name.into(),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        detail: detail.into(),
        witness,
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn bivector(n: usize, terms: &[(usize, usize, i64)]) -> Multivector<Q> {
    let mut out = Multivector::zero(n, 2);
    for &(i, j, x) in terms {
        out.add_wedge(&[i, j], q(x));
    }
    out
}

fn grid(len: usize) -> impl Iterator<Item = Vec<i64>> {
    std::iter::repeat_n([-1i64, 0, 1], len).multi_cartesian_product()
}

fn nondegenerate_zoo() -> Vec<ZooAlgebra<Q>> {
    zoo().into_iter().filter(|z| z.algebra.classify().nondegenerate).collect()
}

/// Extra algebras where every closed form has index tuples.
fn fixtures() -> Vec<(&'static str, FlatLieAlgebra<Q>)> {
    vec![
        ("k2l2", FlatLieAlgebra::from_ints(2, 2, &[&[1, 0], &[1, 2]]).expect("valid")),
        ("k1l3", FlatLieAlgebra::from_ints(1, 3, &[&[1]]).expect("valid")),
    ]
}

/// The dim-3 parametric cocycle in `(a, b, c, e)`.
fn dim3_cocycle(p: &[i64]) -> Cochain<Q> {
    let (a, b, c, e) = (p[0], p[1], p[2], p[3]);
    Cochain::from_values(vec![
        bivector(3, &[(0, 1, a), (0, 2, b), (1, 2, c)]),
        bivector(3, &[(0, 1, e), (1, 2, b)]),
        bivector(3, &[(0, 2, e), (1, 2, -a)]),
    ])
    .expect("three values")
}

/// The dim-4 parametric cocycle in
/// `(n11^((1)), c11, e11, g11, h11, n11, C, G, H)` with `C = c11^(1)`,
/// `G = g11^(1)`, `H = h11^(1)`.
fn dim4_cocycle(p: &[i64]) -> Cochain<Q> {
    let (nz, c, e, gs, h, n, cc, gg, hh) = (p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
    Cochain::from_values(vec![
        bivector(4, &[(0, 2, c), (0, 3, e), (1, 2, gs), (1, 3, h), (2, 3, n)]),
        bivector(4, &[(2, 3, nz)]),
        bivector(4, &[(0, 2, cc), (1, 2, gg), (1, 3, hh), (2, 3, e)]),
        bivector(4, &[(0, 3, cc), (1, 2, -hh), (1, 3, gg), (2, 3, -c)]),
    ])
    .expect("four values")
}

/// The cocycle space equals the span of the unit-parameter family.
fn parametric_space_claim(
    g: &FlatLieAlgebra<Q>,
    params: usize,
    family: fn(&[i64]) -> Cochain<Q>,
    expected: usize,
) -> Claim {
    let space = cocycle_space(g);
    let units: Vec<Vec<Q>> = (0..params)
        .map(|i| {
            let mut p = vec![0; params];
            p[i] = 1;
            family(&p).to_flat()
        })
        .collect();
    let family_space = SubspaceBasis::from_vectors(space.ambient_dim(), units);
    claim(
        "cocycle-space",
        space.dim() == expected && family_space == space,
        format!(
            "dim {} (expected {expected}); parametric family spans it: {}",
            space.dim(),
            family_space == space
        ),
        None,
    )
}

fn solvable(xi: &Cochain<Q>) -> (bool, Vec<usize>) {
    let dims = derived_series_dims(&DualBracket::new(xi));
    (dims.last() == Some(&0), dims)
}

fn dim3_claims() -> Vec<Claim> {
    let g = FlatLieAlgebra::<Q>::from_ints(1, 0, &[&[1]]).expect("valid");
    let mut out = vec![parametric_space_claim(&g, 4, dim3_cocycle, 4)];

    let mut mismatch = None;
    let mut unsolvable = None;
    let (mut points, mut bialgebras) = (0, 0);
    for p in grid(4) {
        let xi = dim3_cocycle(&p);
        let verdict = is_bialgebra(&g, &xi).passed();
        let predicate = p[2] == 0 || p[3] == 0;
        points += 1;
        if verdict != predicate && mismatch.is_none() {
            mismatch = Some(format!("(a,b,c,e) = {p:?}: bialgebra {verdict}, predicate {predicate}"));
        }
        if verdict {
            bialgebras += 1;
            let (ok, dims) = solvable(&xi);
            if !ok && unsolvable.is_none() {
                unsolvable = Some(format!("(a,b,c,e) = {p:?}: derived series dims {dims:?}"));
            }
        }
    }
    out.push(claim(
        "bialgebra-predicate",
        mismatch.is_none(),
        format!("{points} grid points over {{-1,0,1}}^4; bialgebra iff c = 0 or e = 0"),
        mismatch,
    ));
    out.push(claim(
        "dual-solvable",
        unsolvable.is_none(),
        format!("{bialgebras} bialgebra grid points; dual derived series reaches 0"),
        unsolvable,
    ));

    let classifier = CybeClassifier::new(&g);
    let (mut tri_bad, mut inv_bad) = (None, None);
    let mut triangular = 0;
    for p in grid(3) {
        let r = bivector(3, &[(0, 1, p[0]), (0, 2, p[1]), (1, 2, p[2])]);
        let v = classifier.classify(&r);
        let in_span = p[0] == 0 && p[1] == 0;
        triangular += (v.class == CybeClass::Triangular) as usize;
        if (v.class == CybeClass::Triangular) != in_span && tri_bad.is_none() {
            tri_bad = Some(format!("r = {}: class {}", g.format(&r, false), v.class.as_str()));
        }
        if v.class == CybeClass::Generic && inv_bad.is_none() {
            inv_bad = Some(format!("r = {}: [r,r] = {}", g.format(&r, false), g.format(&v.bracket_square, false)));
        }
    }
    out.push(claim(
        "cybe-triangular-set",
        tri_bad.is_none(),
        format!("{triangular} of 27 grid bivectors triangular; expected exactly span{{d1^d2}}"),
        tri_bad,
    ));
    out.push(claim(
        "bracket-square-invariant",
        inv_bad.is_none(),
        "[r,r] is ad-invariant for all 27 grid bivectors",
        inv_bad,
    ));

    let xi = dim3_cocycle(&[0, 0, 1, 1]);
    let j = DualBracket::new(&xi).jacobiator(0, 1, 2);
    let expected = Multivector::term(3, &[0], q(-2));
    out.push(claim(
        "jacobiator-witness",
        j == expected,
        format!("(a,b,c,e) = (0,0,1,1): J(s*,d1*,d2*) = {}", g.format(&j, true)),
        None,
    ));
    out
}

fn dim4_claims() -> Vec<Claim> {
    let g = FlatLieAlgebra::<Q>::from_ints(1, 1, &[&[1]]).expect("valid");
    let mut out = vec![parametric_space_claim(&g, 9, dim4_cocycle, 9)];

    let names = "(n11^((1)),c11,e11,g11,h11,n11,c11^(1),g11^(1),h11^(1))";
    let (mut stated_bad, mut derived_bad, mut unsolvable) = (None, None, None);
    let (mut stated_agree, mut derived_agree, mut points, mut bialgebras, mut nonsolvable) = (0, 0, 0, 0, 0);
    for p in grid(9) {
        let (nz, c, e, gs, h, n, cc, gg, hh) = (p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
        let xi = dim4_cocycle(&p);
        let verdict = is_bialgebra(&g, &xi).passed();
        let linear = gs * cc - c * gg + e * hh == 0 && h * cc - e * gg - c * hh == 0;
        let stated = ((nz == 0 && n == 0) || c == 0) && linear;
        let derived = ((nz == 0 && n == 0) || (cc == 0 && gg == 0)) && linear;
        points += 1;
        if stated == verdict {
            stated_agree += 1;
        } else if stated_bad.is_none() {
            stated_bad = Some(format!("{names} = {p:?}: bialgebra {verdict}, predicate {stated}"));
        }
        if derived == verdict {
            derived_agree += 1;
        } else if derived_bad.is_none() {
            derived_bad = Some(format!("{names} = {p:?}: bialgebra {verdict}, predicate {derived}"));
        }
        if verdict {
            bialgebras += 1;
            let (ok, dims) = solvable(&xi);
            if !ok {
                nonsolvable += 1;
                if unsolvable.is_none() {
                    unsolvable = Some(format!("{names} = {p:?}: derived series dims {dims:?}"));
                }
            }
        }
    }
    out.push(claim(
        "bialgebra-predicate",
        stated_bad.is_none(),
        format!(
            "stated predicate (n11^((1)) = n11 = 0 or c11 = 0, plus the two linear equations) agrees on {stated_agree} of {points} grid points"
        ),
        stated_bad,
    ));
    out.push(claim(
        "bialgebra-predicate-derived",
        derived_bad.is_none(),
        format!(
            "derived predicate (n11^((1)) = n11 = 0 or c11^(1) = g11^(1) = 0, plus the two linear equations) agrees on {derived_agree} of {points} grid points"
        ),
        derived_bad,
    ));
    out.push(claim(
        "dual-solvable",
        unsolvable.is_none(),
        format!("{nonsolvable} of {bialgebras} bialgebra grid points have a non-solvable dual"),
        unsolvable,
    ));

    let example = dim4_cocycle(&[0, 1, 0, 1, 1, 0, 1, 1, 1]);
    out.push(claim(
        "check-bialgebra-example",
        is_bialgebra(&g, &example).passed(),
        "c11 = 1, n11 = n11^((1)) = 0, linear equations satisfied",
        None,
    ));

    let blades = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let classifier = CybeClassifier::new(&g);
    let (mut tri_bad, mut inv_bad) = (None, None);
    let (mut triangular, mut generic) = (0, 0);
    for p in grid(6) {
        let terms: Vec<_> = blades.iter().zip(&p).map(|(&(i, j), &x)| (i, j, x)).collect();
        let r = bivector(4, &terms);
        let v = classifier.classify(&r);
        // span{s^z, z^d1, z^d2}
        let in_span = p[1] == 0 && p[2] == 0 && p[5] == 0;
        triangular += (v.class == CybeClass::Triangular) as usize;
        if (v.class == CybeClass::Triangular) != in_span && tri_bad.is_none() {
            tri_bad = Some(format!("r = {}: class {}", g.format(&r, false), v.class.as_str()));
        }
        if v.class == CybeClass::Generic {
            generic += 1;
            if inv_bad.is_none() {
                inv_bad = Some(format!(
                    "r = {}: [r,r] = {}",
                    g.format(&r, false),
                    g.format(&v.bracket_square, false)
                ));
            }
        }
    }
    out.push(claim(
        "cybe-triangular-set",
        tri_bad.is_none(),
        format!("{triangular} of 729 grid bivectors triangular; expected exactly span{{s1^z1, z1^d1, z1^d2}} (27)"),
        tri_bad,
    ));
    out.push(claim(
        "bracket-square-invariant",
        inv_bad.is_none(),
        format!("{generic} of 729 grid bivectors have [r,r] not ad-invariant"),
        inv_bad,
    ));
    out
}

fn lemma_claims() -> Vec<Claim> {
    let zoo = zoo::<Q>();
    let mut out: Vec<Claim> = zoo
        .par_iter()
        .flat_map_iter(|z| {
            let g = &z.algebra;
            let witness = g
                .curvature_violation()
                .map(|t| format!("curvature at {t:?}"))
                .or_else(|| g.jacobi_violation().map(|t| format!("Jacobi at {t:?}")))
                .or_else(|| g.trace_violation().map(|x| format!("trace of ad_{}", g.basis_name(x))));
            let flat = claim(
                format!("flat/{}", z.name),
                witness.is_none(),
                "zero curvature, Jacobi and unimodularity on all basis triples",
                witness,
            );
            let report = g.classify();
            let lemma = match (invariants(g, 2), lemma_inv_closed_form(g)) {
                (Ok(nullspace), Ok(closed)) => claim(
                    format!("invariants/{}", z.name),
                    nullspace == closed,
                    format!(
                        "invariant bivectors: nullspace dim {}, closed form dim {}, pairs {:?}",
                        nullspace.dim(),
                        closed.dim(),
                        report.pairs
                    ),
                    None,
                ),
                (_, Err(e)) | (Err(e), _) => Claim {
                    name: format!("invariants/{}", z.name),
                    verdict: Verdict::Anomaly,
                    detail: "closed form refused".into(),
                    witness: Some(e.to_string()),
                },
            };
            [flat, lemma]
        })
        .collect();
    let expected = [("dim3", 1), ("dim4", 1), ("g_1", 4), ("g_2", 2), ("g_-1", 4)];
    let found: Vec<(&str, usize, usize)> = expected
        .iter()
        .map(|&(name, dim)| {
            let g = zoo.iter().find(|z| z.name == name).expect("zoo member");
            (name, dim, invariants(&g.algebra, 2).expect("degree 2").dim())
        })
        .collect();
    let bad = found.iter().find(|(_, want, got)| want != got);
    out.push(claim(
        "invariant-dims",
        bad.is_none(),
        found.iter().map(|(n, _, d)| format!("{n}: {d}")).join(", "),
        bad.map(|(n, want, got)| format!("{n}: expected {want}, found {got}")),
    ));
    let degeneracy: Vec<(String, bool, Vec<(usize, usize, i8)>)> = zoo
        .iter()
        .map(|z| {
            let r = z.algebra.classify();
            (z.name.to_string(), r.nondegenerate, r.pairs)
        })
        .collect();
    let wrong = degeneracy.iter().find(|(name, nondeg, pairs)| match name.as_str() {
        "g_1" => *nondeg || pairs != &[(1, 2, 1)],
        "g_-1" => *nondeg || pairs != &[(1, 2, -1)],
        _ => !*nondeg,
    });
    out.push(claim(
        "degeneracy",
        wrong.is_none(),
        "g_alpha degenerate exactly for alpha = 1, -1; all other zoo members nondegenerate",
        wrong.map(|(n, nd, p)| format!("{n}: nondegenerate {nd}, pairs {p:?}")),
    ));
    out
}

fn theorem_claims() -> Vec<Claim> {
    let zoo = zoo::<Q>();
    let mut out: Vec<Claim> = zoo
        .par_iter()
        .map(|z| {
            let g = &z.algebra;
            let sparse = cocycle_space(g);
            let dense = cocycle_space_dense(g);
            let cob = coboundary_space(g);
            claim(
                format!("cocycles/{}", z.name),
                sparse == dense && cob.is_subspace_of(&sparse),
                format!(
                    "cocycles {} (two assembly paths agree: {}), coboundaries {}, H1 {}",
                    sparse.dim(),
                    sparse == dense,
                    cob.dim(),
                    sparse.dim() - cob.dim()
                ),
                None,
            )
        })
        .collect();
    let nondeg = nondegenerate_zoo();
    let per_algebra: Vec<Vec<Claim>> = nondeg
        .par_iter()
        .enumerate()
        .map(|(k, z)| {
            let g = &z.algebra;
            let space = cocycle_space(g);
            let decomposer = Decomposer::new(g);
            vec![
                decomposition_claim(z.name, g, &space, &decomposer),
                case_filter_claim(z.name, g, &space, &decomposer, 1000 + k as u64),
                exactness_claim(z.name, g, 2000 + k as u64),
            ]
        })
        .collect();
    out.extend(per_algebra.into_iter().flatten());
    out
}

fn decomposition_claim(
    name: &str,
    g: &FlatLieAlgebra<Q>,
    space: &SubspaceBasis<Q>,
    decomposer: &Decomposer<'_, Q>,
) -> Claim {
    let witness = space.vectors().iter().enumerate().find_map(|(k, v)| {
        let xi = Cochain::from_flat(g.dim(), v);
        match decomposer.decompose(&xi) {
            Err(e) => Some(format!("basis cocycle {k}: {e}")),
            Ok(dec) => {
                let check = decomposer.verify(&xi, &dec);
                let tables = check_tables(g, &dec.r);
                if !check.passed() {
                    Some(format!("basis cocycle {k}: {check:?}"))
                } else if !tables.anomalies.is_empty() {
                    Some(format!("basis cocycle {k}: anomalies {:?}", tables.anomalies))
                } else {
                    tables.failures().next().map(|f| {
                        format!("basis cocycle {k}: table {} ({}) {}", f.table, f.case, f.relation)
                    })
                }
            }
        }
    });
    claim(
        format!("decomposition/{name}"),
        witness.is_none(),
        format!(
            "{} basis cocycles: decomposition, invariance of R on s+z, Phi reconstruction and table relations",
            space.dim()
        ),
        witness,
    )
}

fn case_filter_claim(
    name: &str,
    g: &FlatLieAlgebra<Q>,
    space: &SubspaceBasis<Q>,
    decomposer: &Decomposer<'_, Q>,
    seed: u64,
) -> Claim {
    let mut rng = rng(seed);
    let mut candidates: Vec<Cochain<Q>> = space
        .vectors()
        .iter()
        .map(|v| Cochain::from_flat(g.dim(), v))
        .collect();
    for _ in 0..40 {
        let mut coords = vec![Q::from_i64(0); space.ambient_dim()];
        for v in space.vectors() {
            if rng.gen_ratio(1, 5) {
                let c: Q = sample::small_scalar(&mut rng);
                for (o, x) in coords.iter_mut().zip(v) {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
        }
        candidates.push(Cochain::from_flat(g.dim(), &coords));
    }
    let mut tested = 0;
    let mut witness = None;
    for xi in candidates.iter().filter(|xi| is_bialgebra(g, xi).passed()) {
        tested += 1;
        match case_filter_with(g, decomposer, xi) {
            Err(e) => witness = witness.or(Some(e.to_string())),
            Ok(report) => {
                if let Some(p) = report.findings().next() {
                    witness = witness.or(Some(format!("plane {} ({:?}) matches no alternative", p.j, p.case)));
                }
            }
        }
    }
    claim(
        format!("case-filter/{name}"),
        witness.is_none(),
        format!("{tested} bialgebra cocycles satisfy the Case I/II necessary conditions"),
        witness,
    )
}

fn exactness_claim(name: &str, g: &FlatLieAlgebra<Q>, seed: u64) -> Claim {
    let mut rng = rng(seed);
    let classifier = CybeClassifier::new(g);
    let solver = ExactnessSolver::new(g).expect("nondegenerate");
    let mut counts = [0usize; 3];
    let mut witness = None;
    for k in 0..100 {
        let density = if k % 2 == 0 { 0.25 } else { 0.6 };
        let r: Multivector<Q> = sample::bivector(g.dim(), density, &mut rng);
        let xi = coboundary(g, &r);
        let class = classifier.classify(&r).class;
        counts[class as usize] += 1;
        let bialgebra = is_bialgebra(g, &xi).passed();
        if bialgebra != (class != CybeClass::Generic) {
            witness = witness.or(Some(format!(
                "r = {}: bialgebra {bialgebra}, class {}",
                g.format(&r, false),
                class.as_str()
            )));
        }
        match solver.solve(&xi) {
            Ok(Some(found)) if coboundary(g, &found) == xi => {}
            other => {
                witness = witness.or(Some(format!("r = {}: exactness returned {other:?}", g.format(&r, false))))
            }
        }
    }
    claim(
        format!("exactness/{name}"),
        witness.is_none(),
        format!(
            "100 random r (triangular {}, invariant_nonzero {}, generic {}): bialgebra iff [r,r] invariant; exactness recovers r",
            counts[0], counts[1], counts[2]
        ),
        witness,
    )
}

fn schouten_claims() -> Vec<Claim> {
    let zoo = zoo::<Q>();
    let mut out: Vec<Claim> = zoo
        .par_iter()
        .enumerate()
        .map(|(k, z)| {
            let g = &z.algebra;
            let mut rng = rng(3000 + k as u64);
            let witness = (0..200).find_map(|_| {
                let x: Multivector<Q> = sample::bivector(g.dim(), 0.5, &mut rng);
                let y: Multivector<Q> = sample::bivector(g.dim(), 0.5, &mut rng);
                let a = schouten(g, &x, &y);
                let b = schouten_oracle(g, &x, &y);
                (a != b).then(|| {
                    format!(
                        "X = {}, Y = {}: {} vs {}",
                        g.format(&x, false),
                        g.format(&y, false),
                        g.format(&a, false),
                        g.format(&b, false)
                    )
                })
            });
            claim(
                format!("schouten-oracle/{}", z.name),
                witness.is_none(),
                "200 random bivector pairs: Lichnerowicz route equals decomposable expansion",
                witness,
            )
        })
        .collect();

    let g3 = FlatLieAlgebra::<Q>::from_ints(1, 0, &[&[1]]).expect("valid");
    let sd1 = Multivector::term(3, &[0, 1], q(1));
    let sq = schouten(&g3, &sd1, &sd1);
    out.push(claim(
        "schouten-example",
        sq == Multivector::term(3, &[0, 1, 2], q(2)),
        format!("dim3: [s1^d1, s1^d1] = {}", g3.format(&sq, false)),
        None,
    ));

    let mut pairing_algebras: Vec<(&str, FlatLieAlgebra<Q>)> = ["g_2", "dim4"]
        .iter()
        .map(|&n| (n, crate::zoo::zoo_algebra(n).expect("zoo member")))
        .collect();
    pairing_algebras.extend(fixtures().into_iter().filter(|(n, _)| *n == "k2l2"));
    for (k, (name, g)) in pairing_algebras.iter().enumerate() {
        out.push(pairing_claim(name, g, 4000 + k as u64));
    }

    for z in nondegenerate_zoo() {
        let g = &z.algebra;
        let basis = WedgeBasis::new(g.dim(), 3);
        let inv = invariants(g, 3).expect("degree 3");
        let witness = inv.vectors().iter().find_map(|v| {
            let t = Multivector::from_dense(&basis, v);
            (3..=8)
                .find(|&m| !module_component(g, &t, m).is_zero())
                .map(|m| format!("invariant {} has an M{m} component", g.format(&t, false)))
        });
        out.push(claim(
            format!("modules/{}", z.name),
            witness.is_none(),
            format!("{} invariant trivectors; none has a component in M3..M8", inv.dim()),
            witness,
        ));
    }
    out
}

fn pairing_claim(name: &str, g: &FlatLieAlgebra<Q>, seed: u64) -> Claim {
    let n = g.dim();
    let r0_blades: Vec<[usize; 2]> = (0..n)
        .tuple_combinations()
        .filter(|&(x, y)| in_complement(g, x, y) && x >= g.k0())
        .map(|(x, y)| [x, y])
        .collect();
    let mut r1_blades = Vec::new();
    for i in 1..=g.k0() {
        for j in i + 1..=g.k0() {
            r1_blades.push([g.s(i), g.s(j)]);
        }
        for j in 1..=g.l0() {
            r1_blades.push([g.s(i), g.z(j)]);
        }
    }
    let mut rng = rng(seed);
    let mut rows = [0usize; 10];
    let mut witness = None;
    for _ in 0..50 {
        let r0: Multivector<Q> = sample::bivector_on(n, &r0_blades, &mut rng);
        let r1: Multivector<Q> = sample::bivector_on(n, &r1_blades, &mut rng);
        for c in pairing_table(g, &r0, &r1) {
            rows[c.row as usize - 1] += 1;
            if !c.agrees() && witness.is_none() {
                witness = Some(format!(
                    "row {} at {}: direct {}, table {} (r0 = {}, r1 = {})",
                    c.row,
                    g.wedge_name(&c.omega),
                    c.direct,
                    c.closed,
                    g.format(&r0, false),
                    g.format(&r1, false)
                ));
            }
        }
    }
    claim(
        format!("pairing-table/{name}"),
        witness.is_none(),
        format!(
            "50 draws; comparisons per row {}",
            rows.iter().enumerate().map(|(i, c)| format!("{}:{c}", i + 1)).join(" ")
        ),
        witness,
    )
}

fn jacobiator_claims() -> Vec<Claim> {
    let mut algebras: Vec<(&str, FlatLieAlgebra<Q>)> =
        nondegenerate_zoo().into_iter().map(|z| (z.name, z.algebra)).collect();
    algebras.extend(fixtures());
    let outcomes: Vec<Vec<FormOutcome>> = algebras
        .par_iter()
        .enumerate()
        .map(|(k, (_, g))| {
            let mut rng = rng(5000 + k as u64);
            let space = cocycle_space(g);
            let decomposer = Decomposer::new(g);
            let mut per_form = vec![FormOutcome::NotApplicable; JacobiatorForm::ALL.len()];
            for _ in 0..30 {
                let xi = sample::cocycle(g, &space, &mut rng);
                let dec = decomposer.decompose(&xi).expect("cocycle");
                let comps = jacobiator_forms(g, &xi, &dec);
                for (slot, form) in per_form.iter_mut().zip(JacobiatorForm::ALL) {
                    *slot = slot.clone().merge(form_outcome(g, &comps, form));
                }
            }
            per_form
        })
        .collect();
    JacobiatorForm::ALL
        .iter()
        .enumerate()
        .map(|(f, form)| {
            let outcome = outcomes
                .iter()
                .fold(FormOutcome::NotApplicable, |acc, o| acc.merge(o[f].clone()));
            let names = algebras.iter().map(|(n, _)| *n).join(", ");
            match outcome {
                FormOutcome::Match { checked } => Claim {
                    name: form.name().into(),
                    verdict: Verdict::Pass,
                    detail: format!("match: {checked} comparisons over {names}"),
                    witness: None,
                },
                FormOutcome::Finding { witness } => Claim {
                    name: form.name().into(),
                    verdict: Verdict::Anomaly,
                    detail: "finding: closed form disagrees with the generic Jacobiator".into(),
                    witness: Some(witness),
                },
                FormOutcome::NotApplicable => Claim {
                    name: form.name().into(),
                    verdict: Verdict::Pass,
                    detail: "not applicable: no index tuples".into(),
                    witness: None,
                },
            }
        })
        .collect()
}
