//! Coordinates on the tube of rank `n` and the Hom/Ext dimensions of its
//! cluster category.
//!
//! An indecomposable is written `(a, b)`: `a` is the vertex of its simple
//! socle and `b` its quasi-length. The Auslander–Reiten translate shifts the
//! first coordinate down by one, `τ(a, b) = (a - 1, b)`, with first
//! coordinates always reduced into `1..=n`.

use core::fmt;

use crate::error::{Error, Result};

/// Rank of a tube, always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TubeRank(u32);

impl TubeRank {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        Ok(TubeRank(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces an arbitrary integer into `1..=n`.
    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        let n = i64::from(self.0);
        ((a - 1).rem_euclid(n) + 1) as u32
    }
}

impl fmt::Display for TubeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An indecomposable object `(a, b)` of the tube of a fixed rank.
///
/// Ordering is lexicographic on `(a, b)`; objects of different rank are never
/// mixed in one collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TubeObject {
    a: u32,
    b: u32,
    rank: TubeRank,
}

impl TubeObject {
    /// Strict constructor: `a` must already lie in `1..=n` and `b >= 1`.
    pub fn new(rank: TubeRank, a: u32, b: u32) -> Result<Self> {
        if a == 0 || a > rank.get() || b == 0 {
            return Err(Error::InvalidObject { a: i64::from(a), b, rank: rank.get() });
        }
        Ok(TubeObject { a, b, rank })
    }

    /// Builds `(a mod n, b)` for any integer first coordinate.
    pub fn reduced(rank: TubeRank, a: i64, b: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidObject { a, b, rank: rank.get() });
        }
        Ok(TubeObject { a: rank.reduce(a), b, rank })
    }

    #[inline]
    pub fn a(&self) -> u32 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> u32 {
        self.b
    }

    #[inline]
    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    /// Shift of the first coordinate by `k`, quasi-length unchanged.
    pub fn shift(&self, k: i64) -> TubeObject {
        TubeObject { a: self.rank.reduce(i64::from(self.a) + k), b: self.b, rank: self.rank }
    }

    /// The Auslander–Reiten translate.
    pub fn tau(&self) -> TubeObject {
        self.shift(-1)
    }

    pub fn tau_inv(&self) -> TubeObject {
        self.shift(1)
    }

    /// Rigid in the cluster tube iff the quasi-length is at most `n - 1`.
    pub fn is_rigid(&self) -> bool {
        self.b < self.rank.get()
    }
}

impl fmt::Display for TubeObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

pub(crate) fn same_rank(x: &TubeObject, y: &TubeObject) -> Result<TubeRank> {
    if x.rank != y.rank {
        return Err(Error::RankMismatch { left: x.rank.get(), right: y.rank.get() });
    }
    Ok(x.rank)
}

pub fn tau(x: &TubeObject) -> TubeObject {
    x.tau()
}

pub fn tau_inv(x: &TubeObject) -> TubeObject {
    x.tau_inv()
}

/// `dim Hom_T(X, Y)` in the tube itself.
///
/// A nonzero map between uniserials factors through a common uniserial of
/// length `e` that is a quotient of `X` (top at `a + b - 1`) and a submodule
/// of `Y` (socle at `c`). Such `e` exist exactly when `e <= min(b, d)` and
/// `e ≡ a + b - c (mod n)`, and each contributes one dimension.
pub fn hom_dim_tube(x: &TubeObject, y: &TubeObject) -> Result<u32> {
    let rank = same_rank(x, y)?;
    let n = i64::from(rank.get());
    let residue = (i64::from(x.a) + i64::from(x.b) - i64::from(y.a)).rem_euclid(n);
    let bound = i64::from(x.b.min(y.b));
    let count = if residue == 0 {
        bound / n
    } else if bound < residue {
        0
    } else {
        (bound - residue) / n + 1
    };
    Ok(count as u32)
}

/// `dim Hom` in the cluster tube: `Hom_T(Y, τ²X) ⊕ Hom_T(X, Y)`.
pub fn hom_dim_cluster(x: &TubeObject, y: &TubeObject) -> Result<u32> {
    same_rank(x, y)?;
    Ok(hom_dim_tube(y, &x.shift(-2))? + hom_dim_tube(x, y)?)
}

/// `dim Ext¹` in the cluster tube: `D Hom_T(Y, τX) ⊕ Hom_T(X, τY)`.
pub fn ext_dim_cluster(x: &TubeObject, y: &TubeObject) -> Result<u32> {
    same_rank(x, y)?;
    Ok(hom_dim_tube(y, &x.tau())? + hom_dim_tube(x, &y.tau())?)
}

/// All three dimensions for an ordered pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomDims {
    pub tube: u32,
    pub cluster: u32,
    pub ext: u32,
}

pub fn hom_dims(x: &TubeObject, y: &TubeObject) -> Result<HomDims> {
    Ok(HomDims { tube: hom_dim_tube(x, y)?, cluster: hom_dim_cluster(x, y)?, ext: ext_dim_cluster(x, y)? })
}

pub fn is_rigid_indec(x: &TubeObject) -> bool {
    x.is_rigid()
}

/// Membership in the wing below `top = (a, b)`: the objects `(a', b')` with
/// `a' >= a` and `a' + b' <= a + b`, where `a'` is lifted into the window
/// `[a, a + n)` before comparing.
pub fn wing_contains(top: &TubeObject, x: &TubeObject) -> bool {
    if top.rank != x.rank {
        return false;
    }
    let lifted = lift_into_window(top.rank, top.a, x.a);
    lifted + u64::from(x.b) <= u64::from(top.a) + u64::from(top.b)
}

/// The smallest representative of `a` (mod n) that is `>= base`.
pub(crate) fn lift_into_window(rank: TubeRank, base: u32, a: u32) -> u64 {
    let n = u64::from(rank.get());
    let offset = (u64::from(a) + n - u64::from(base) % n) % n;
    u64::from(base) + offset
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(n: u32, a: u32, b: u32) -> TubeObject {
        TubeObject::new(TubeRank::new(n).unwrap(), a, b).unwrap()
    }

    #[test]
    fn rank_must_be_at_least_two() {
        assert_eq!(TubeRank::new(1), Err(Error::InvalidRank(1)));
        assert!(TubeRank::new(2).is_ok());
    }

    #[test]
    fn strict_constructor_rejects_out_of_range() {
        let r = TubeRank::new(3).unwrap();
        assert!(TubeObject::new(r, 0, 1).is_err());
        assert!(TubeObject::new(r, 4, 1).is_err());
        assert!(TubeObject::new(r, 1, 0).is_err());
        assert_eq!(TubeObject::reduced(r, 4, 2).unwrap(), obj(3, 1, 2));
        assert_eq!(TubeObject::reduced(r, -1, 2).unwrap(), obj(3, 2, 2));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&obj(3, 1, 1)), obj(3, 3, 1));
        assert_eq!(tau(&obj(3, 2, 5)), obj(3, 1, 5));
        let x = obj(5, 4, 7);
        assert_eq!(tau_inv(&tau(&x)), x);
        assert_eq!(tau(&tau_inv(&x)), x);
    }

    #[test]
    fn hom_tube_examples() {
        assert_eq!(hom_dim_tube(&obj(3, 1, 1), &obj(3, 1, 1)).unwrap(), 1);
        assert_eq!(hom_dim_tube(&obj(3, 1, 1), &obj(3, 2, 1)).unwrap(), 0);
        assert_eq!(hom_dim_tube(&obj(3, 1, 2), &obj(3, 2, 1)).unwrap(), 1);
        assert_eq!(hom_dim_tube(&obj(3, 1, 6), &obj(3, 1, 6)).unwrap(), 2);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let err = hom_dim_tube(&obj(3, 1, 1), &obj(4, 1, 1)).unwrap_err();
        assert_eq!(err, Error::RankMismatch { left: 3, right: 4 });
        assert!(ext_dim_cluster(&obj(3, 1, 1), &obj(4, 1, 1)).is_err());
        assert!(hom_dim_cluster(&obj(3, 1, 1), &obj(4, 1, 1)).is_err());
    }

    #[test]
    fn hom_cluster_examples() {
        assert_eq!(hom_dim_cluster(&obj(3, 1, 2), &obj(3, 1, 2)).unwrap(), 2);
        assert_eq!(hom_dim_cluster(&obj(3, 1, 1), &obj(3, 2, 1)).unwrap(), 1);
        assert_eq!(hom_dim_cluster(&obj(2, 1, 1), &obj(2, 1, 1)).unwrap(), 2);
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim_cluster(&obj(3, 1, 2), &obj(3, 1, 2)).unwrap(), 0);
        assert_eq!(ext_dim_cluster(&obj(3, 1, 3), &obj(3, 1, 3)).unwrap(), 2);
        assert_eq!(ext_dim_cluster(&obj(3, 1, 2), &obj(3, 2, 2)).unwrap(), 2);
    }

    #[test]
    fn rigidity_examples() {
        assert!(is_rigid_indec(&obj(3, 1, 2)));
        assert!(!is_rigid_indec(&obj(3, 1, 3)));
        assert!(is_rigid_indec(&obj(8, 5, 7)));
    }

    #[test]
    fn wing_examples() {
        assert!(wing_contains(&obj(3, 1, 2), &obj(3, 2, 1)));
        assert!(!wing_contains(&obj(3, 1, 2), &obj(3, 3, 1)));
        let top = obj(5, 4, 3);
        assert!(wing_contains(&top, &top));
        // wraps: top (3,2) at n=3 covers (1,1) lifted to 4
        assert!(wing_contains(&obj(3, 3, 2), &obj(3, 1, 1)));
        assert!(!wing_contains(&obj(3, 3, 2), &obj(3, 1, 2)));
    }
}
