//! Seeded random draws of scalars, bivectors and cocycles.

use rand::Rng;

use crate::cohomology::Cochain;
use crate::exteralg::{Multivector, SubspaceBasis, WedgeBasis};
use crate::flatliealg::FlatLieAlgebra;
use crate::scalar::Scalar;

/// A small rational: an integer in `[-3, 3]`, or with probability 1/4 a
/// fraction `p/q` with `q ∈ {2, 3}`.
pub fn small_scalar<S: Scalar, R: Rng + ?Sized>(rng: &mut R) -> S {
    let p = rng.gen_range(-3..=3);
    if rng.gen_ratio(1, 4) {
        S::from_ratio(p, rng.gen_range(2..=3))
    } else {
        S::from_i64(p)
    }
}

/// A bivector with every coordinate drawn independently; each is zero with
/// probability `1 - density`.
pub fn bivector<S: Scalar, R: Rng + ?Sized>(dim: usize, density: f64, rng: &mut R) -> Multivector<S> {
    let mut out = Multivector::zero(dim, 2);
    for b in WedgeBasis::new(dim, 2).blades() {
        if rng.gen_bool(density) {
            out.add_wedge(b.indices(), small_scalar(rng));
        }
    }
    out
}

/// A bivector supported on the given blades.
pub fn bivector_on<S: Scalar, R: Rng + ?Sized>(
    dim: usize,
    blades: &[[usize; 2]],
    rng: &mut R,
) -> Multivector<S> {
    let mut out = Multivector::zero(dim, 2);
    for b in blades {
        out.add_wedge(b, small_scalar(rng));
    }
    out
}

/// Random element of a subspace: a combination of its basis vectors.
pub fn combination<S: Scalar, R: Rng + ?Sized>(space: &SubspaceBasis<S>, rng: &mut R) -> Vec<S> {
    let mut out = vec![S::zero(); space.ambient_dim()];
    for v in space.vectors() {
        let c: S = small_scalar(rng);
        for (o, x) in out.iter_mut().zip(v) {
            *o = o.clone() + c.clone() * x.clone();
        }
    }
    out
}

/// Random cocycle drawn from a precomputed cocycle space.
pub fn cocycle<S: Scalar, R: Rng + ?Sized>(
    g: &FlatLieAlgebra<S>,
    space: &SubspaceBasis<S>,
    rng: &mut R,
) -> Cochain<S> {
    Cochain::from_flat(g.dim(), &combination(space, rng))
}
