//! Algebra, cochain and bivector files.
//!
//! ```json
//! {"k0": 1, "l0": 0, "m": 1, "lambda": [["1"]]}
//! {"algebra": "dim3.json", "entries": {"s1": {"s1^d1": "1", "d1^d2": "-1/2"}}}
//! {"entries": {"s1^d1": "1"}}
//! ```
//!
//! Scalars are rational strings `p` or `p/q`. Wedge names list basis vectors
//! in global order; anything else is rejected.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use flatbialg::{Algebra, CochainQ, MultivectorQ, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("{location}: {message}")]
    Invalid { location: String, message: String },

    #[error("{location}: {source}")]
    Algebra {
        location: String,
        source: flatbialg::Error,
    },
}

pub type InputResult<T> = Result<T, InputError>;

pub(crate) fn invalid(location: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Invalid {
        location: location.into(),
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub k0: usize,
    pub l0: usize,
    pub m: usize,
    pub lambda: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub entries: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BivectorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraRef>,
    pub entries: BTreeMap<String, String>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> InputResult<T> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| InputError::Json {
        path: path.to_owned(),
        source,
    })
}

/// Parse `p` or `p/q` with `q ≠ 0`; no whitespace, no `+`.
pub fn parse_rational(s: &str, location: &str) -> InputResult<Rational> {
    let ok_chars = !s.is_empty()
        && s.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/')
        && !s[1..].contains('-');
    let parsed = if ok_chars { s.parse::<Rational>().ok() } else { None };
    parsed.ok_or_else(|| invalid(location, format!("`{s}` is not a rational of the form p or p/q")))
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

impl AlgebraFile {
    pub fn build(&self, location: &str) -> InputResult<Algebra> {
        let mut rows = Vec::with_capacity(self.lambda.len());
        for (j, row) in self.lambda.iter().enumerate() {
            let mut parsed = Vec::with_capacity(row.len());
            for (i, entry) in row.iter().enumerate() {
                parsed.push(parse_rational(entry, &format!("{location}: lambda[{j}][{i}]"))?);
            }
            rows.push(parsed);
        }
        Algebra::build(self.k0, self.l0, self.m, rows).map_err(|source| InputError::Algebra {
            location: location.into(),
            source,
        })
    }

    pub fn from_algebra(g: &Algebra) -> AlgebraFile {
        AlgebraFile {
            k0: g.k0(),
            l0: g.l0(),
            m: g.m(),
            lambda: (1..=g.m())
                .map(|j| (1..=g.k0()).map(|i| format_rational(g.lam(i, j))).collect())
                .collect(),
        }
    }
}

pub fn read_algebra(path: &Path) -> InputResult<Algebra> {
    let file: AlgebraFile = read_json(path)?;
    file.build(&path.display().to_string())
}

/// Resolve the algebra of a cochain or bivector file against an optional
/// `-a` file. If both are given they must describe the same algebra.
fn resolve_algebra(
    embedded: &Option<AlgebraRef>,
    file: &Path,
    explicit: Option<&Algebra>,
) -> InputResult<Algebra> {
    let location = file.display().to_string();
    let inner = match embedded {
        None => None,
        Some(AlgebraRef::Inline(a)) => Some(a.build(&format!("{location}: algebra"))?),
        Some(AlgebraRef::Path(p)) => {
            let base = file.parent().unwrap_or_else(|| Path::new(""));
            Some(read_algebra(&base.join(p))?)
        }
    };
    match (inner, explicit) {
        (Some(a), Some(b)) if a != *b => Err(invalid(
            location,
            "embedded algebra differs from the algebra given with -a",
        )),
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b.clone()),
        (None, None) => Err(invalid(location, "no algebra: embed one or pass -a")),
    }
}

/// Parse `x^y` (or a single name when `degree == 1`) into flat indices,
/// requiring strictly increasing global order.
pub fn parse_wedge(g: &Algebra, name: &str, degree: usize, location: &str) -> InputResult<Vec<usize>> {
    let parts: Vec<&str> = name.split('^').collect();
    if parts.len() != degree {
        return Err(invalid(location, format!("`{name}` is not a wedge of {degree} basis vectors")));
    }
    let mut out = Vec::with_capacity(degree);
    for p in parts {
        let i = g
            .parse_basis(p)
            .map_err(|e| invalid(location, format!("`{p}`: {e}")))?;
        if let Some(&last) = out.last() {
            if i <= last {
                return Err(invalid(
                    location,
                    format!("`{name}` is not in canonical order (expected {})", canonical_hint(g, name)),
                ));
            }
        }
        out.push(i);
    }
    Ok(out)
}

fn canonical_hint(g: &Algebra, name: &str) -> String {
    let mut idx: Vec<usize> = name.split('^').filter_map(|p| g.parse_basis(p).ok()).collect();
    idx.sort_unstable();
    g.wedge_name(&idx)
}

fn parse_bivector(
    g: &Algebra,
    entries: &BTreeMap<String, String>,
    location: &str,
) -> InputResult<MultivectorQ> {
    let mut out = MultivectorQ::zero(g.dim(), 2);
    for (name, value) in entries {
        let loc = format!("{location}.\"{name}\"");
        let idx = parse_wedge(g, name, 2, &loc)?;
        out.add_wedge(&idx, parse_rational(value, &loc)?);
    }
    Ok(out)
}

pub fn read_cochain(path: &Path, explicit: Option<&Algebra>) -> InputResult<(Algebra, CochainQ)> {
    let file: CochainFile = read_json(path)?;
    let g = resolve_algebra(&file.algebra, path, explicit)?;
    let mut xi = CochainQ::zero(g.dim());
    for (basis, values) in &file.entries {
        let loc = format!("{}: entries.\"{basis}\"", path.display());
        let x = g
            .parse_basis(basis)
            .map_err(|e| invalid(&loc, e.to_string()))?;
        xi.set(x, parse_bivector(&g, values, &loc)?);
    }
    Ok((g, xi))
}

pub fn read_bivector(path: &Path, explicit: Option<&Algebra>) -> InputResult<(Algebra, MultivectorQ)> {
    let file: BivectorFile = read_json(path)?;
    let g = resolve_algebra(&file.algebra, path, explicit)?;
    let r = parse_bivector(&g, &file.entries, &format!("{}: entries", path.display()))?;
    Ok((g, r))
}

/// Multivector as a map from wedge names to rational strings.
pub fn multivector_entries(g: &Algebra, v: &MultivectorQ) -> BTreeMap<String, String> {
    v.terms()
        .map(|(b, c)| (g.wedge_name(b.indices()), format_rational(c)))
        .collect()
}

/// Cochain in file form (zero values omitted).
pub fn cochain_file(g: &Algebra, xi: &CochainQ) -> CochainFile {
    CochainFile {
        algebra: Some(AlgebraRef::Inline(AlgebraFile::from_algebra(g))),
        entries: (0..g.dim())
            .filter(|&x| !xi.value(x).is_zero())
            .map(|x| (g.basis_name(x), multivector_entries(g, xi.value(x))))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim3() -> Algebra {
        Algebra::from_ints(1, 0, &[&[1]]).unwrap()
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6", "x").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rational("4", "x").unwrap().to_string(), "4");
        for bad in ["", "1.5", "1/0", " 1", "+1", "a", "1/2/3", "--1"] {
            assert!(parse_rational(bad, "x").is_err(), "{bad}");
        }
    }

    #[test]
    fn wedge_names() {
        let g = dim3();
        assert_eq!(parse_wedge(&g, "s1^d2", 2, "x").unwrap(), vec![0, 2]);
        let err = parse_wedge(&g, "d1^s1", 2, "entries.\"s1\"").unwrap_err();
        assert!(err.to_string().contains("canonical order (expected s1^d1)"), "{err}");
        assert!(parse_wedge(&g, "d1^d1", 2, "x").is_err());
        assert!(parse_wedge(&g, "z1^d1", 2, "x").is_err());
        assert!(parse_wedge(&g, "s1", 2, "x").is_err());
    }

    #[test]
    fn cochain_round_trip() {
        let g = dim3();
        let mut xi = CochainQ::zero(3);
        let mut v = MultivectorQ::zero(3, 2);
        v.add_wedge(&[1, 2], Rational::new(1.into(), 2.into()));
        xi.set(0, v);
        let file = cochain_file(&g, &xi);
        let dir = std::env::temp_dir().join(format!("flatbialg-files-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.json");
        fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        let (g2, xi2) = read_cochain(&path, None).unwrap();
        assert_eq!(g2, g);
        assert_eq!(xi2, xi);
        fs::remove_dir_all(dir).unwrap();
    }
}
