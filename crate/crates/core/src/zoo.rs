//! Built-in algebras used by the verification suite.

use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// `(name, k0, l0, Λ rows as (numerator, denominator))`.
type Entry = (&'static str, usize, usize, &'static [&'static [(i64, i64)]]);

const ENTRIES: &[Entry] = &[
    ("dim3", 1, 0, &[&[(1, 1)]]),
    ("dim4", 1, 1, &[&[(1, 1)]]),
    ("g_2", 1, 0, &[&[(1, 1)], &[(2, 1)]]),
    ("g_1", 1, 0, &[&[(1, 1)], &[(1, 1)]]),
    ("g_-1", 1, 0, &[&[(1, 1)], &[(-1, 1)]]),
    ("g_3", 1, 0, &[&[(1, 1)], &[(3, 1)]]),
    ("g_1/2", 1, 0, &[&[(1, 1)], &[(1, 2)]]),
    ("rows_10_01_11", 2, 0, &[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)], &[(1, 1), (1, 1)]]),
];

/// A named zoo member. `Λ = [[1],[2]]` and `Λ = [[1],[3]]` are the members
/// `g_2` and `g_3`.
#[derive(Clone, Debug)]
pub struct ZooAlgebra<S> {
    pub name: &'static str,
    pub algebra: FlatLieAlgebra<S>,
}

pub fn zoo<S: Scalar>() -> Vec<ZooAlgebra<S>> {
    ENTRIES
        .iter()
        .map(|&(name, k0, l0, rows)| {
            let lambda = rows
                .iter()
                .map(|r| r.iter().map(|&(p, q)| S::from_ratio(p, q)).collect())
                .collect::<Vec<Vec<S>>>();
            let m = rows.len();
            ZooAlgebra {
                name,
                algebra: FlatLieAlgebra::build(k0, l0, m, lambda).expect("zoo entries are valid"),
            }
        })
        .collect()
}

pub fn zoo_algebra<S: Scalar>(name: &str) -> Option<FlatLieAlgebra<S>> {
    zoo().into_iter().find(|z| z.name == name).map(|z| z.algebra)
}

pub fn zoo_names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.0)
}
