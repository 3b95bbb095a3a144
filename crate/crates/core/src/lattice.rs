//! Exact integer-lattice primitives: points and jump vectors in `Z^d`,
//! coordinate-wise domination, antichains of minimal elements, upward
//! closures, vector gcds and span dimension.
//!
//! Everything here is exact; ranks are computed over the rationals and the
//! gcd of a vector set reduces to scalar gcds of the multiples of a
//! primitive direction.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point or jump vector on the `d`-dimensional integer lattice.
///
/// Comparisons come in two flavours: [`IntVec::dominates`] is the
/// coordinate-wise partial order used for upward closures, while the derived
/// `Ord` is lexicographic and only used for deterministic storage and output
/// ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(pub Vec<i64>);

impl IntVec {
    pub fn new(coords: Vec<i64>) -> Self {
        IntVec(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        IntVec(vec![0; dim])
    }

    /// Unit vector `e_i` (0-based) in dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        IntVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Coordinate-wise `self >= other`.
    pub fn dominates(&self, other: &IntVec) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.dim(), other.dim());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.dim(), other.dim());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> IntVec {
        IntVec(self.0.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> IntVec {
        self.scale(-1)
    }

    pub fn dot(&self, other: &IntVec) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }

    /// Largest absolute coordinate value.
    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Drop coordinate `j`, yielding the projection to the remaining axes.
    pub fn drop_coord(&self, j: usize) -> IntVec {
        let mut v = Vec::with_capacity(self.dim().saturating_sub(1));
        for (i, &c) in self.0.iter().enumerate() {
            if i != j {
                v.push(c);
            }
        }
        IntVec(v)
    }
}

impl Index<usize> for IntVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// gcd of the absolute values of the non-zero coordinates of `v`.
pub fn coord_gcd(v: &IntVec) -> Result<i64> {
    if v.is_zero() {
        return Err(Error::invalid("coord_gcd of the zero vector"));
    }
    Ok(v.0.iter().fold(0i64, |g, &c| g.gcd(&c.abs())))
}

/// Vector gcd of a finite set: present exactly when the set spans one
/// dimension, in which case it is the unique common divisor divisible by all
/// others, normalised so its first non-zero coordinate is positive.
pub fn vec_gcd(set: &[IntVec]) -> Result<Option<IntVec>> {
    if set.is_empty() {
        return Err(Error::invalid("vec_gcd of an empty set"));
    }
    if set.iter().any(|v| v.is_zero()) {
        return Err(Error::invalid("vec_gcd of a set containing the zero vector"));
    }
    let a = &set[0];
    let mut p = {
        let g = coord_gcd(a)?;
        IntVec(a.0.iter().map(|c| c / g).collect())
    };
    // Sign convention: first non-zero coordinate positive.
    if let Some(&first) = p.0.iter().find(|&&c| c != 0) {
        if first < 0 {
            p = p.neg();
        }
    }
    let pivot = p.0.iter().position(|&c| c != 0).expect("non-zero");
    let mut multiples = Vec::with_capacity(set.len());
    for b in set {
        if b[pivot] % p[pivot] != 0 {
            return Ok(None);
        }
        let k = b[pivot] / p[pivot];
        if *b != p.scale(k) {
            return Ok(None);
        }
        multiples.push(k);
    }
    let g = multiples.iter().fold(0i64, |g, k| g.gcd(&k.abs()));
    Ok(Some(p.scale(g)))
}

/// Exact rank over the rationals of the matrix whose rows are `set`.
pub fn span_dim(set: &[IntVec]) -> usize {
    if set.is_empty() {
        return 0;
    }
    let cols = set[0].dim();
    let mut rows: Vec<Vec<BigRational>> = set
        .iter()
        .map(|v| {
            v.0.iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] / &lead;
                for c in col..cols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A finite antichain of pairwise incomparable lattice points with
/// non-negative coordinates; the canonical generator set of an upward-closed
/// region.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Antichain {
    elements: Vec<IntVec>,
}

impl Antichain {
    /// Minimise `points` to an antichain generating the same upward closure.
    ///
    /// Returns an error on empty input or on points with a negative
    /// coordinate.
    pub fn from_points(points: &[IntVec]) -> Result<Antichain> {
        let min = minimal_set(points)?;
        if let Some(bad) = min.elements.iter().find(|p| !p.is_nonnegative()) {
            return Err(Error::invalid(format!(
                "antichain element {bad} has a negative coordinate"
            )));
        }
        Ok(min)
    }

    pub fn elements(&self) -> &[IntVec] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVec> {
        self.elements.iter()
    }

    /// Upward-closure membership: `x >= a` for some generator `a`.
    pub fn covers(&self, x: &IntVec) -> bool {
        self.elements.iter().any(|a| x.dominates(a))
    }
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

/// Minimal set of a finite point set: the antichain of elements dominating no
/// other element. Closure-equal to its input.
pub fn minimal_set(points: &[IntVec]) -> Result<Antichain> {
    if points.is_empty() {
        return Err(Error::invalid("minimal_set of an empty set"));
    }
    let mut distinct: Vec<IntVec> = points.to_vec();
    distinct.sort();
    distinct.dedup();
    let mut kept = Vec::new();
    'outer: for (i, x) in distinct.iter().enumerate() {
        for (j, y) in distinct.iter().enumerate() {
            if i != j && x.dominates(y) {
                // x >= y strictly dominates after dedup, so x is redundant.
                continue 'outer;
            }
        }
        kept.push(x.clone());
    }
    Ok(Antichain { elements: kept })
}

/// Membership of `x` in the upward closure of the antichain `a`.
pub fn in_up_closure(x: &IntVec, a: &Antichain) -> bool {
    a.covers(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> IntVec {
        IntVec::new(coords.to_vec())
    }

    #[test]
    fn vec_gcd_no_common_divisor() {
        assert_eq!(vec_gcd(&[v(&[1, 2]), v(&[2, 1])]).unwrap(), None);
    }

    #[test]
    fn vec_gcd_opposite_pair() {
        assert_eq!(
            vec_gcd(&[v(&[2, -2]), v(&[-2, 2])]).unwrap(),
            Some(v(&[2, -2]))
        );
    }

    #[test]
    fn vec_gcd_scalars() {
        // Brute-force oracle: every common divisor of {6,-4} divides the
        // result and the result is itself a common divisor.
        let got = vec_gcd(&[v(&[6]), v(&[-4])]).unwrap().unwrap();
        let divisors: Vec<i64> = (1..=6).filter(|d| 6 % d == 0 && 4 % d == 0).collect();
        assert_eq!(*divisors.iter().max().unwrap(), got[0]);
        assert_eq!(got, v(&[2]));
    }

    #[test]
    fn vec_gcd_rejects_bad_input() {
        assert!(vec_gcd(&[]).is_err());
        assert!(vec_gcd(&[v(&[0, 0])]).is_err());
    }

    #[test]
    fn vec_gcd_sign_normalisation() {
        // First non-zero coordinate of the gcd must be positive.
        assert_eq!(
            vec_gcd(&[v(&[0, -3]), v(&[0, 6])]).unwrap(),
            Some(v(&[0, 3]))
        );
    }

    #[test]
    fn span_dim_examples() {
        assert_eq!(span_dim(&[v(&[1, -1]), v(&[2, -2])]), 1);
        assert_eq!(span_dim(&[v(&[1, 0]), v(&[-1, 1]), v(&[0, -1])]), 2);
        assert_eq!(span_dim(&[]), 0);
    }

    #[test]
    fn span_dim_one_iff_gcd_exists() {
        let sets = [
            vec![v(&[2, 4]), v(&[3, 6])],
            vec![v(&[1, 2]), v(&[2, 1])],
            vec![v(&[5, -10, 15])],
            vec![v(&[1, 0, 0]), v(&[0, 1, 0])],
        ];
        for set in &sets {
            let has_gcd = vec_gcd(set).unwrap().is_some();
            assert_eq!(span_dim(set) == 1, has_gcd, "set {set:?}");
        }
    }

    #[test]
    fn minimal_set_examples() {
        let got = minimal_set(&[v(&[2, 2]), v(&[3, 1]), v(&[3, 3])]).unwrap();
        assert_eq!(got.elements(), &[v(&[2, 2]), v(&[3, 1])]);

        let single = minimal_set(&[v(&[5, 5])]).unwrap();
        assert_eq!(single.elements(), &[v(&[5, 5])]);

        let got = minimal_set(&[v(&[1, 2]), v(&[2, 1]), v(&[2, 2])]).unwrap();
        assert_eq!(got.elements(), &[v(&[1, 2]), v(&[2, 1])]);

        assert!(minimal_set(&[]).is_err());
    }

    #[test]
    fn up_closure_membership() {
        let a = Antichain::from_points(&[v(&[2, 2]), v(&[3, 1])]).unwrap();
        assert!(in_up_closure(&v(&[4, 3]), &a));
        assert!(in_up_closure(&v(&[3, 1]), &a));
        let b = Antichain::from_points(&[v(&[1, 0])]).unwrap();
        assert!(!in_up_closure(&v(&[0, 0]), &b));
    }

    #[test]
    fn coord_gcd_examples() {
        assert_eq!(coord_gcd(&v(&[2, 2])).unwrap(), 2);
        assert_eq!(coord_gcd(&v(&[1, -1])).unwrap(), 1);
        assert_eq!(coord_gcd(&v(&[6, 0, -9])).unwrap(), 3);
        assert!(coord_gcd(&v(&[0, 0])).is_err());
    }
}
