//! The coefficient field.
//!
//! Everything in this crate is generic over [`Scalar`]. Exact results need an
//! exact field; [`crate::Rational`] (arbitrary-precision rationals) is the
//! type every check and file format is defined for. The float impls exist for
//! quick exploration and compare against zero with a fixed absolute tolerance.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

/// A field element usable as a coefficient.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;

    /// Build `numer / denom`. `denom` must be nonzero.
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }

    /// Zero test used by elimination and sparse storage. Exact for rationals.
    fn is_negligible(&self) -> bool;

    /// `true` when arithmetic on this type never rounds.
    fn is_exact() -> bool;

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn is_exact() -> bool {
        true
    }
}

const F64_ZERO_TOL: f64 = 1e-10;
const F32_ZERO_TOL: f32 = 1e-5;

impl Scalar for f64 {
    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() < F64_ZERO_TOL
    }

    fn is_exact() -> bool {
        false
    }
}

impl Scalar for f32 {
    fn from_i64(value: i64) -> Self {
        value as f32
    }

    fn is_negligible(&self) -> bool {
        Signed::abs(self) < F32_ZERO_TOL
    }

    fn is_exact() -> bool {
        false
    }
}

/// Sign of a permutation given as a sequence of distinct items; `None` when an
/// item repeats.
pub(crate) fn sort_with_sign(items: &mut [usize]) -> Option<bool> {
    // insertion sort, counting transpositions
    let mut odd = false;
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && items[j - 1] > items[j] {
            items.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && items[j - 1] == items[j] {
            return None;
        }
    }
    if items.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

/// Multiply by `-1` when `negate` is set.
pub(crate) fn signed<S: Scalar>(value: S, negate: bool) -> S {
    if negate {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_tracks_parity() {
        let mut v = [2, 0, 1];
        assert_eq!(sort_with_sign(&mut v), Some(false));
        assert_eq!(v, [0, 1, 2]);
        let mut v = [1, 0];
        assert_eq!(sort_with_sign(&mut v), Some(true));
        let mut v = [3, 1, 3];
        assert_eq!(sort_with_sign(&mut v), None);
    }

    #[test]
    fn rationals_are_normalized() {
        let q = BigRational::from_ratio(4, -6);
        assert_eq!(q.to_string(), "-2/3");
        assert!(q.denom() > &BigInt::from(0));
    }
}
