//! Rigid and maximal rigid objects of the cluster tube.
//!
//! Maximal rigid objects are found as maximal cliques of the compatibility
//! graph on rigid indecomposables. Their structure (unique top summand of
//! quasi-length `n - 1`, all summands in its wing) is checked separately and
//! is never used to drive the enumeration.

use alloc::vec::Vec;
use core::fmt;

use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::tube::{ext_dim_cluster, lift_into_window, same_rank, wing_contains, TubeObject, TubeRank};

pub fn is_rigid_set(objs: &[TubeObject]) -> Result<bool> {
    for (i, x) in objs.iter().enumerate() {
        for y in &objs[i..] {
            if ext_dim_cluster(x, y)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ext¹ vanishes in both directions.
pub fn compatible(x: &TubeObject, y: &TubeObject) -> Result<bool> {
    Ok(ext_dim_cluster(x, y)? == 0 && ext_dim_cluster(y, x)? == 0)
}

/// All `(a, b)` with `b <= n - 1`, in lexicographic order.
pub fn enumerate_rigid_indecs(rank: TubeRank) -> Vec<TubeObject> {
    let n = rank.get();
    (1..=n)
        .flat_map(|a| (1..n).map(move |b| (a, b)))
        .map(|(a, b)| TubeObject::new(rank, a, b).expect("coordinates in range"))
        .collect()
}

/// A maximal rigid object, stored as its lexicographically sorted summands.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MaximalRigid {
    rank: TubeRank,
    summands: Vec<TubeObject>,
}

impl MaximalRigid {
    /// Validates rigidity, maximality and the top/wing structure.
    pub fn new(rank: TubeRank, mut summands: Vec<TubeObject>) -> Result<Self> {
        for s in &summands {
            if s.rank() != rank {
                return Err(Error::RankMismatch { left: rank.get(), right: s.rank().get() });
            }
        }
        summands.sort_unstable();
        summands.dedup();
        if !is_rigid_set(&summands)? {
            return Err(Error::NotMaximalRigid("summands have nonzero Ext"));
        }
        let t = MaximalRigid { rank, summands };
        if !t.is_maximal()? {
            return Err(Error::NotMaximalRigid("a further rigid indecomposable is compatible"));
        }
        t.check_structure()?;
        Ok(t)
    }

    /// Wraps a sorted clique without validation.
    pub(crate) fn from_sorted(rank: TubeRank, summands: Vec<TubeObject>) -> Self {
        debug_assert!(summands.windows(2).all(|w| w[0] < w[1]));
        MaximalRigid { rank, summands }
    }

    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    pub fn summands(&self) -> &[TubeObject] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn index_of(&self, x: &TubeObject) -> Option<usize> {
        self.summands.binary_search(x).ok()
    }

    pub fn contains(&self, x: &TubeObject) -> bool {
        self.index_of(x).is_some()
    }

    pub fn top(&self) -> Result<TubeObject> {
        top_summand(self.rank, &self.summands)
    }

    fn is_maximal(&self) -> Result<bool> {
        for x in enumerate_rigid_indecs(self.rank) {
            if self.contains(&x) {
                continue;
            }
            let mut fits = true;
            for s in &self.summands {
                if !compatible(s, &x)? {
                    fits = false;
                    break;
                }
            }
            if fits {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `n - 1` summands, a unique top of quasi-length `n - 1`, and every
    /// summand in the wing of the top.
    pub fn check_structure(&self) -> Result<()> {
        let n = self.rank.get() as usize;
        if self.summands.len() != n - 1 {
            return Err(Error::NotMaximalRigid("wrong number of summands"));
        }
        let top = self.top()?;
        if !self.summands.iter().all(|s| wing_contains(&top, s)) {
            return Err(Error::NotMaximalRigid("summand outside the wing of the top"));
        }
        Ok(())
    }

    /// Copy with summand `k` removed.
    pub fn without(&self, k: usize) -> Result<AlmostComplete> {
        if k >= self.summands.len() {
            return Err(Error::IndexOutOfRange { index: k, len: self.summands.len() });
        }
        let mut rest = self.summands.clone();
        rest.remove(k);
        Ok(AlmostComplete { rank: self.rank, summands: rest })
    }
}

impl fmt::Display for MaximalRigid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{},{}", s.a(), s.b())?;
        }
        Ok(())
    }
}

/// The unique summand of quasi-length `n - 1`.
pub fn top_summand(rank: TubeRank, summands: &[TubeObject]) -> Result<TubeObject> {
    let mut tops = summands.iter().filter(|s| s.b() == rank.get() - 1);
    match (tops.next(), tops.next()) {
        (Some(t), None) => Ok(*t),
        (None, _) => Err(Error::NotMaximalRigid("no summand of quasi-length n-1")),
        (Some(_), Some(_)) => Err(Error::NotMaximalRigid("several summands of quasi-length n-1")),
    }
}

/// All maximal rigid objects, in canonical order.
pub fn enumerate_maximal_rigid(rank: TubeRank) -> Result<Vec<MaximalRigid>> {
    let verts = enumerate_rigid_indecs(rank);
    let mut err = None;
    let cliques = maximal_cliques(verts.len(), |i, j| match compatible(&verts[i], &verts[j]) {
        Ok(c) => c,
        Err(e) => {
            err.get_or_insert(e);
            false
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut out: Vec<MaximalRigid> = cliques
        .into_iter()
        .map(|c| MaximalRigid::from_sorted(rank, c.into_iter().map(|i| verts[i]).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// Rigid object with `n - 2` summands, i.e. a maximal rigid object missing
/// one summand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlmostComplete {
    rank: TubeRank,
    summands: Vec<TubeObject>,
}

impl AlmostComplete {
    pub fn new(rank: TubeRank, mut summands: Vec<TubeObject>) -> Result<Self> {
        for s in &summands {
            if s.rank() != rank {
                return Err(Error::RankMismatch { left: rank.get(), right: s.rank().get() });
            }
            if !s.is_rigid() {
                return Err(Error::NotRigid(*s));
            }
        }
        summands.sort_unstable();
        summands.dedup();
        if summands.len() + 2 != rank.get() as usize {
            return Err(Error::InvalidArgument("almost complete object needs n-2 summands"));
        }
        if !is_rigid_set(&summands)? {
            return Err(Error::InvalidArgument("summands have nonzero Ext"));
        }
        Ok(AlmostComplete { rank, summands })
    }

    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    pub fn summands(&self) -> &[TubeObject] {
        &self.summands
    }
}

/// The two indecomposables completing `tbar` to a maximal rigid object.
///
/// A candidate is a rigid indecomposable outside `tbar` compatible with all
/// of it; a candidate completes `tbar` maximally iff it is compatible with no
/// other candidate.
pub fn complements(tbar: &AlmostComplete) -> Result<(TubeObject, TubeObject)> {
    let mut candidates = Vec::new();
    'outer: for x in enumerate_rigid_indecs(tbar.rank) {
        if tbar.summands.binary_search(&x).is_ok() {
            continue;
        }
        for s in &tbar.summands {
            if !compatible(s, &x)? {
                continue 'outer;
            }
        }
        candidates.push(x);
    }
    let mut found = Vec::new();
    for (i, x) in candidates.iter().enumerate() {
        let mut isolated = true;
        for (j, y) in candidates.iter().enumerate() {
            if i != j && compatible(x, y)? {
                isolated = false;
                break;
            }
        }
        if isolated {
            found.push(*x);
        }
    }
    match found[..] {
        [x, y] => Ok((x, y)),
        _ => Err(Error::ComplementCount { found: found.len() }),
    }
}

/// Position of a non-top summand inside the wing, relative to the top:
/// the summand is `(s + offset, length)` for top `(s, n - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WingPosition {
    pub offset: u32,
    pub length: u32,
}

/// A maximal rigid object as (top coordinate, wing positions of the other
/// summands). For fixed top the position sets are the tilting modules of a
/// linearly oriented `A_{n-1}` quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TiltingDatum {
    pub top: u32,
    pub positions: Vec<WingPosition>,
}

pub fn to_tilting_datum(t: &MaximalRigid) -> Result<TiltingDatum> {
    let top = t.top()?;
    let mut positions: Vec<WingPosition> = t
        .summands
        .iter()
        .filter(|s| **s != top)
        .map(|s| {
            let lifted = lift_into_window(t.rank, top.a(), s.a());
            WingPosition { offset: (lifted - u64::from(top.a())) as u32, length: s.b() }
        })
        .collect();
    positions.sort_unstable();
    Ok(TiltingDatum { top: top.a(), positions })
}

pub fn from_tilting_datum(rank: TubeRank, d: &TiltingDatum) -> Result<MaximalRigid> {
    let n = rank.get();
    let top = TubeObject::new(rank, d.top, n - 1)?;
    let mut summands = Vec::with_capacity(d.positions.len() + 1);
    summands.push(top);
    for p in &d.positions {
        if p.length == 0 || p.offset + p.length > n - 1 {
            return Err(Error::InvalidArgument("wing position outside the wing"));
        }
        summands.push(TubeObject::reduced(rank, i64::from(d.top) + i64::from(p.offset), p.length)?);
    }
    MaximalRigid::new(rank, summands)
}

/// `Y_k = (s, kn - 1)` for top `(s, n - 1)`: Ext¹-orthogonal to every summand
/// of `t`, not a summand itself, and not rigid.
pub fn cluster_tilting_witness(t: &MaximalRigid, k: u32) -> Result<TubeObject> {
    if k < 2 {
        return Err(Error::InvalidArgument("witness index k must be at least 2"));
    }
    let top = t.top()?;
    TubeObject::new(t.rank, top.a(), k * t.rank.get() - 1)
}

/// Checks the three properties promised by [`cluster_tilting_witness`].
pub fn witness_holds(t: &MaximalRigid, y: &TubeObject) -> Result<bool> {
    for s in &t.summands {
        same_rank(s, y)?;
        if ext_dim_cluster(s, y)? != 0 || ext_dim_cluster(y, s)? != 0 {
            return Ok(false);
        }
    }
    Ok(!t.contains(y) && ext_dim_cluster(y, y)? > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rank(n: u32) -> TubeRank {
        TubeRank::new(n).unwrap()
    }

    fn obj(n: u32, a: u32, b: u32) -> TubeObject {
        TubeObject::new(rank(n), a, b).unwrap()
    }

    fn mr(n: u32, pairs: &[(u32, u32)]) -> Result<MaximalRigid> {
        MaximalRigid::new(rank(n), pairs.iter().map(|&(a, b)| obj(n, a, b)).collect())
    }

    #[test]
    fn rigid_set_examples() {
        assert!(is_rigid_set(&[obj(3, 1, 2), obj(3, 1, 1)]).unwrap());
        assert!(!is_rigid_set(&[obj(3, 1, 3)]).unwrap());
        assert!(is_rigid_set(&[]).unwrap());
    }

    #[test]
    fn rigid_indec_counts() {
        assert_eq!(enumerate_rigid_indecs(rank(2)).len(), 2);
        assert_eq!(enumerate_rigid_indecs(rank(3)).len(), 6);
        assert_eq!(enumerate_rigid_indecs(rank(4)).len(), 12);
    }

    #[test]
    fn maximal_rigid_small_ranks() {
        let two = enumerate_maximal_rigid(rank(2)).unwrap();
        assert_eq!(two, vec![mr(2, &[(1, 1)]).unwrap(), mr(2, &[(2, 1)]).unwrap()]);
        let three = enumerate_maximal_rigid(rank(3)).unwrap();
        assert_eq!(three.len(), 6);
        assert!(three.contains(&mr(3, &[(1, 2), (1, 1)]).unwrap()));
        assert!(three.contains(&mr(3, &[(1, 2), (2, 1)]).unwrap()));
        assert_eq!(enumerate_maximal_rigid(rank(4)).unwrap().len(), 20);
    }

    #[test]
    fn top_summand_examples() {
        assert_eq!(mr(3, &[(1, 2), (1, 1)]).unwrap().top().unwrap(), obj(3, 1, 2));
        let listed = [obj(4, 1, 3), obj(4, 1, 1), obj(4, 2, 1)];
        assert_eq!(top_summand(rank(4), &listed).unwrap(), obj(4, 1, 3));
        // (1,1) and (2,1) extend each other at n = 4, so the list above is not rigid
        assert!(mr(4, &[(1, 3), (1, 1), (2, 1)]).is_err());
        assert_eq!(mr(4, &[(1, 3), (1, 1), (3, 1)]).unwrap().top().unwrap(), obj(4, 1, 3));
        assert!(top_summand(rank(3), &[obj(3, 1, 1), obj(3, 2, 1)]).is_err());
        assert!(mr(3, &[(1, 1), (2, 1)]).is_err());
    }

    #[test]
    fn rejects_non_maximal() {
        assert!(matches!(mr(4, &[(1, 3), (1, 1)]), Err(Error::NotMaximalRigid(_))));
        assert!(matches!(mr(3, &[(1, 3), (1, 1)]), Err(Error::NotMaximalRigid(_))));
    }

    #[test]
    fn tilting_datum_round_trip_and_counts() {
        let t = mr(3, &[(1, 2), (1, 1)]).unwrap();
        let d = to_tilting_datum(&t).unwrap();
        assert_eq!(d, TiltingDatum { top: 1, positions: vec![WingPosition { offset: 0, length: 1 }] });
        assert_eq!(from_tilting_datum(rank(3), &d).unwrap(), t);

        let all = enumerate_maximal_rigid(rank(4)).unwrap();
        let with_top_two = all.iter().filter(|t| t.top().unwrap().a() == 2).count();
        assert_eq!(with_top_two, 5);
    }

    #[test]
    fn bad_tilting_datum() {
        let d = TiltingDatum { top: 1, positions: vec![WingPosition { offset: 1, length: 2 }] };
        assert!(from_tilting_datum(rank(3), &d).is_err());
        // inside the wing but incompatible with each other
        let d = TiltingDatum {
            top: 1,
            positions: vec![WingPosition { offset: 0, length: 1 }, WingPosition { offset: 1, length: 1 }],
        };
        assert!(from_tilting_datum(rank(4), &d).is_err());
    }

    #[test]
    fn complement_examples() {
        let r3 = rank(3);
        let c = complements(&AlmostComplete::new(r3, vec![obj(3, 1, 1)]).unwrap()).unwrap();
        assert_eq!(c, (obj(3, 1, 2), obj(3, 3, 2)));
        let c = complements(&AlmostComplete::new(r3, vec![obj(3, 1, 2)]).unwrap()).unwrap();
        assert_eq!(c, (obj(3, 1, 1), obj(3, 2, 1)));
        let c = complements(&AlmostComplete::new(rank(2), vec![]).unwrap()).unwrap();
        assert_eq!(c, (obj(2, 1, 1), obj(2, 2, 1)));
    }

    #[test]
    fn almost_complete_validation() {
        assert!(AlmostComplete::new(rank(3), vec![]).is_err());
        assert!(AlmostComplete::new(rank(3), vec![obj(3, 1, 3)]).is_err());
        assert!(AlmostComplete::new(rank(4), vec![obj(4, 1, 1), obj(4, 2, 1)]).is_err());
    }

    #[test]
    fn witness_examples() {
        let t = mr(3, &[(1, 2), (1, 1)]).unwrap();
        let y = cluster_tilting_witness(&t, 2).unwrap();
        assert_eq!(y, obj(3, 1, 5));
        assert!(witness_holds(&t, &y).unwrap());
        let y3 = cluster_tilting_witness(&t, 3).unwrap();
        assert_eq!(y3, obj(3, 1, 8));
        assert!(witness_holds(&t, &y3).unwrap());
        assert!(cluster_tilting_witness(&t, 1).is_err());

        for t in enumerate_maximal_rigid(rank(4)).unwrap() {
            if t.top().unwrap() == obj(4, 2, 3) {
                assert_eq!(cluster_tilting_witness(&t, 2).unwrap(), obj(4, 2, 7));
            }
        }
    }
}
