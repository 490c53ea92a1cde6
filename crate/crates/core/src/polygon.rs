//! Centrally symmetric diagonals and triangulations of the `2n`-gon.
//!
//! Corners are labelled `1..=2n` clockwise. A rigid indecomposable `(a, b)`
//! corresponds to the pair `([a, a+b+1], [a+n, a+b+1+n])`; quasi-length
//! `n - 1` gives a diameter, which is its own centrally symmetric partner.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::clique::maximal_cliques;
use crate::error::{Error, Result};
use crate::mutation::{connected, ExchangeGraph};
use crate::rigid::MaximalRigid;
use crate::tube::{TubeObject, TubeRank};

fn reduce_corner(rank: TubeRank, c: i64) -> u32 {
    let m = 2 * i64::from(rank.get());
    ((c - 1).rem_euclid(m) + 1) as u32
}

/// A diagonal `[p, q]` of the `2n`-gon, stored with `p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    p: u32,
    q: u32,
    rank: TubeRank,
}

impl Diagonal {
    /// Corners are reduced mod `2n`; they must end up distinct and non-adjacent.
    pub fn new(rank: TubeRank, p: i64, q: i64) -> Result<Self> {
        let corners = 2 * rank.get();
        let (p, q) = (reduce_corner(rank, p), reduce_corner(rank, q));
        let (p, q) = if p < q { (p, q) } else { (q, p) };
        if p == q || q - p == 1 || q - p == corners - 1 {
            return Err(Error::InvalidDiagonal { p, q, corners });
        }
        Ok(Diagonal { p, q, rank })
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.p, self.q)
    }

    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    /// Image under the half-turn.
    pub fn rotated_half(&self) -> Diagonal {
        let n = i64::from(self.rank.get());
        Diagonal::new(self.rank, i64::from(self.p) + n, i64::from(self.q) + n)
            .expect("rotation preserves diagonals")
    }

    pub fn is_diameter(&self) -> bool {
        self.q - self.p == self.rank.get()
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.p, self.q)
    }
}

/// Interior crossing: the endpoints strictly interleave around the circle.
/// Shared endpoints and equal diagonals do not cross.
pub fn diagonals_cross(d: &Diagonal, e: &Diagonal) -> bool {
    let inside = |x: u32| d.p < x && x < d.q;
    let shares = d.p == e.p || d.p == e.q || d.q == e.p || d.q == e.q;
    !shares && (inside(e.p) != inside(e.q))
}

/// A centrally symmetric pair of diagonals; a diameter is a degenerate pair
/// with `d1 == d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CsPair {
    d1: Diagonal,
    d2: Diagonal,
}

impl CsPair {
    /// The pair generated by one representative.
    pub fn from_diagonal(d: Diagonal) -> CsPair {
        let e = d.rotated_half();
        if d <= e {
            CsPair { d1: d, d2: e }
        } else {
            CsPair { d1: e, d2: d }
        }
    }

    pub fn diagonals(&self) -> (Diagonal, Diagonal) {
        (self.d1, self.d2)
    }

    pub fn is_degenerate(&self) -> bool {
        self.d1 == self.d2
    }

    pub fn rank(&self) -> TubeRank {
        self.d1.rank
    }
}

impl fmt::Display for CsPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}", self.d1)
        } else {
            write!(f, "({},{})", self.d1, self.d2)
        }
    }
}

/// Crossing points between two pairs, summed over the 2x2 grid of
/// representatives. A diameter therefore counts twice.
pub fn crossing_points(x: &CsPair, y: &CsPair) -> u32 {
    [x.d1, x.d2].iter().flat_map(|d| [y.d1, y.d2].map(|e| diagonals_cross(d, &e))).filter(|&c| c).count()
        as u32
}

pub fn delta(x: &TubeObject) -> Result<CsPair> {
    if !x.is_rigid() {
        return Err(Error::NotRigid(*x));
    }
    let (a, b) = (i64::from(x.a()), i64::from(x.b()));
    Ok(CsPair::from_diagonal(Diagonal::new(x.rank(), a, a + b + 1)?))
}

pub fn delta_inv(pair: &CsPair) -> Result<TubeObject> {
    let rank = pair.rank();
    let n = i64::from(rank.get());
    let (p, q) = (i64::from(pair.d1.p), i64::from(pair.d1.q));
    for (start, end) in [(p, q), (q, p)] {
        let b = (end - start - 1).rem_euclid(2 * n);
        if (1..n).contains(&b) {
            return TubeObject::reduced(rank, start, b as u32);
        }
    }
    unreachable!("every diagonal spans at most n-1 corners on one side")
}

/// Every centrally symmetric pair of the `2n`-gon, sorted.
pub fn all_cs_pairs(rank: TubeRank) -> Vec<CsPair> {
    let corners = i64::from(2 * rank.get());
    let mut out: Vec<CsPair> = (1..=corners)
        .flat_map(|p| (p + 1..=corners).map(move |q| (p, q)))
        .filter_map(|(p, q)| Diagonal::new(rank, p, q).ok())
        .map(CsPair::from_diagonal)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `n - 1` pairwise non-crossing centrally symmetric pairs, exactly one of
/// them a diameter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CsTriangulation {
    rank: TubeRank,
    pairs: Vec<CsPair>,
}

impl CsTriangulation {
    pub fn new(rank: TubeRank, mut pairs: Vec<CsPair>) -> Result<Self> {
        if pairs.iter().any(|p| p.rank() != rank) {
            return Err(Error::NotTriangulation("pairs from a different polygon"));
        }
        pairs.sort_unstable();
        pairs.dedup();
        if pairs.len() + 1 != rank.get() as usize {
            return Err(Error::NotTriangulation("wrong number of pairs"));
        }
        for (i, x) in pairs.iter().enumerate() {
            if pairs[i + 1..].iter().any(|y| crossing_points(x, y) != 0) {
                return Err(Error::NotTriangulation("crossing pairs"));
            }
        }
        if pairs.iter().filter(|p| p.is_degenerate()).count() != 1 {
            return Err(Error::NotTriangulation("needs exactly one diameter"));
        }
        Ok(CsTriangulation { rank, pairs })
    }

    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    pub fn pairs(&self) -> &[CsPair] {
        &self.pairs
    }

    pub fn index_of(&self, p: &CsPair) -> Option<usize> {
        self.pairs.binary_search(p).ok()
    }

    /// Distinct diagonals, counting a diameter once.
    pub fn diagonal_count(&self) -> usize {
        self.pairs.iter().map(|p| if p.is_degenerate() { 1 } else { 2 }).sum()
    }
}

impl fmt::Display for CsTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

pub fn triangulation_of(t: &MaximalRigid) -> Result<CsTriangulation> {
    let pairs = t.summands().iter().map(delta).collect::<Result<Vec<_>>>()?;
    CsTriangulation::new(t.rank(), pairs)
}

/// Replaces `pair` by the unique other pair that keeps a triangulation.
pub fn flip(tri: &CsTriangulation, pair: &CsPair) -> Result<CsTriangulation> {
    let k = tri.index_of(pair).ok_or(Error::InvalidArgument("pair is not in the triangulation"))?;
    let mut rest = tri.pairs.clone();
    rest.remove(k);
    let mut found = Vec::new();
    for q in all_cs_pairs(tri.rank) {
        if q == *pair || rest.contains(&q) {
            continue;
        }
        if rest.iter().all(|r| crossing_points(r, &q) == 0) {
            let mut next = rest.clone();
            next.push(q);
            if let Ok(t) = CsTriangulation::new(tri.rank, next) {
                found.push(t);
            }
        }
    }
    if found.len() != 1 {
        return Err(Error::FlipCount { pair: *pair, found: found.len() });
    }
    Ok(found.pop().expect("one replacement"))
}

/// All centrally symmetric triangulations, as maximal non-crossing families.
pub fn enumerate_triangulations(rank: TubeRank) -> Result<Vec<CsTriangulation>> {
    let pairs = all_cs_pairs(rank);
    let cliques = maximal_cliques(pairs.len(), |i, j| crossing_points(&pairs[i], &pairs[j]) == 0);
    let mut out = cliques
        .into_iter()
        .map(|c| CsTriangulation::new(rank, c.into_iter().map(|i| pairs[i]).collect()))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Triangulations linked by flips.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    rank: TubeRank,
    nodes: Vec<CsTriangulation>,
    index: BTreeMap<CsTriangulation, usize>,
    /// `neighbors[v][k]` is the flip of pair `k` of node `v`.
    neighbors: Vec<Vec<usize>>,
}

impl FlipGraph {
    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    pub fn nodes(&self) -> &[CsTriangulation] {
        &self.nodes
    }

    pub fn node_of(&self, t: &CsTriangulation) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().enumerate().map(|(v, ns)| ns.iter().filter(|&&w| v < w).count()).sum()
    }

    pub fn is_connected(&self) -> bool {
        connected(self.nodes.len(), |v| self.neighbors[v].iter().copied())
    }
}

pub fn flip_graph(rank: TubeRank) -> Result<FlipGraph> {
    let nodes = enumerate_triangulations(rank)?;
    let index: BTreeMap<CsTriangulation, usize> =
        nodes.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let mut neighbors = Vec::with_capacity(nodes.len());
    for t in &nodes {
        let mut row = Vec::with_capacity(t.pairs.len());
        for p in &t.pairs {
            let next = flip(t, p)?;
            row.push(*index.get(&next).ok_or(Error::NotTriangulation("flip left the enumeration"))?);
        }
        neighbors.push(row);
    }
    Ok(FlipGraph { rank, nodes, index, neighbors })
}

/// Whether `T -> triangulation_of(T)` is a graph isomorphism sending the
/// exchange of summand `k` to the flip of `delta(T_k)`.
pub fn graphs_isomorphic_via_delta(eg: &ExchangeGraph, fg: &FlipGraph) -> Result<bool> {
    if eg.rank() != fg.rank || eg.node_count() != fg.nodes.len() {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(eg.node_count());
    let mut hit = alloc::vec![false; fg.nodes.len()];
    for seed in eg.seeds() {
        let tri = triangulation_of(seed.object())?;
        let Some(v) = fg.node_of(&tri) else { return Ok(false) };
        if core::mem::replace(&mut hit[v], true) {
            return Ok(false);
        }
        image.push(v);
    }
    for (u, seed) in eg.seeds().iter().enumerate() {
        let tri = &fg.nodes[image[u]];
        for (k, &(w, _)) in eg.neighbors(u).iter().enumerate() {
            let pair = delta(&seed.object().summands()[k])?;
            let Some(slot) = tri.index_of(&pair) else { return Ok(false) };
            if fg.neighbors[image[u]][slot] != image[w] {
                return Ok(false);
            }
        }
    }
    Ok(eg.edges().len() == fg.edge_count())
}
