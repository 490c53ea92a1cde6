//! Exchange matrices, seeds, and the exchange graph of maximal rigid objects.
//!
//! Only the zig-zag seed has its matrix written down directly. Every other
//! seed gets its matrix by Fomin–Zelevinsky mutation along a path from it, and
//! the graph builder insists that all paths agree.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rigid::{complements, enumerate_maximal_rigid, MaximalRigid};
use crate::tube::{TubeObject, TubeRank};

/// Largest absolute entry an exchange matrix of finite type can carry.
pub const MAX_ENTRY: i64 = 2;

/// Fomin–Zelevinsky mutation of a square matrix at index `k`.
pub fn fz_mutate_matrix(b: &IntMatrix, k: usize) -> Result<IntMatrix> {
    if !b.is_square() {
        return Err(Error::Shape("exchange matrix must be square"));
    }
    let size = b.rows();
    if k >= size {
        return Err(Error::IndexOutOfRange { index: k, len: size });
    }
    let mut out = b.clone();
    for i in 0..size {
        for j in 0..size {
            let v = if i == k || j == k {
                -b.get(i, j)
            } else {
                let (bik, bkj) = (b.get(i, k), b.get(k, j));
                b.get(i, j) + (bik.abs() * bkj + bik * bkj.abs()) / 2
            };
            out.set(i, j, v);
        }
    }
    Ok(out)
}

pub fn is_sign_skew_symmetric(b: &IntMatrix) -> bool {
    b.is_square()
        && (0..b.rows()).all(|i| (0..b.cols()).all(|j| b.get(i, j).signum() == -b.get(j, i).signum()))
}

/// `a_ii = 2`, `a_ij = -|b_ij|` off the diagonal.
pub fn cartan_counterpart(b: &IntMatrix) -> Result<IntMatrix> {
    if !b.is_square() {
        return Err(Error::Shape("Cartan counterpart needs a square matrix"));
    }
    let mut a = IntMatrix::zeros(b.rows(), b.cols());
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            a.set(i, j, if i == j { 2 } else { -b.get(i, j).abs() });
        }
    }
    Ok(a)
}

/// Square integer matrix whose rows and columns are labelled by summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    order: Vec<TubeObject>,
    entries: IntMatrix,
}

impl ExchangeMatrix {
    pub fn new(order: Vec<TubeObject>, entries: IntMatrix) -> Result<Self> {
        if !entries.is_square() || entries.rows() != order.len() {
            return Err(Error::Shape("matrix size differs from the number of labels"));
        }
        Ok(ExchangeMatrix { order, entries })
    }

    pub fn order(&self) -> &[TubeObject] {
        &self.order
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries.get(i, j)
    }

    /// Mutation at `k`; labels are left alone.
    pub fn fz_mutate(&self, k: usize) -> Result<ExchangeMatrix> {
        Ok(ExchangeMatrix { order: self.order.clone(), entries: fz_mutate_matrix(&self.entries, k)? })
    }

    /// Same matrix with rows and columns listed in `new_order`, which must be
    /// a permutation of the current labels.
    pub fn reindexed(&self, new_order: &[TubeObject]) -> Result<ExchangeMatrix> {
        if new_order.len() != self.order.len() {
            return Err(Error::Shape("reindexing changes the number of labels"));
        }
        let mut perm = Vec::with_capacity(new_order.len());
        let mut used = alloc::vec![false; new_order.len()];
        for x in new_order {
            let pos = self
                .order
                .iter()
                .position(|y| y == x)
                .ok_or(Error::InvalidArgument("reindexing label not present"))?;
            if core::mem::replace(&mut used[pos], true) {
                return Err(Error::InvalidArgument("reindexing label repeated"));
            }
            perm.push(pos);
        }
        Ok(ExchangeMatrix { order: new_order.to_vec(), entries: self.entries.permuted(&perm)? })
    }

    pub fn is_sign_skew_symmetric(&self) -> bool {
        is_sign_skew_symmetric(&self.entries)
    }

    pub fn cartan_counterpart(&self) -> IntMatrix {
        cartan_counterpart(&self.entries).expect("exchange matrices are square")
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.entries().map(i64::abs).max().unwrap_or(0)
    }
}

/// The zig-zag object `⊕_{i=1}^{t} (i, n-2i+1) ⊕ (i, n-2i)`, listed by
/// decreasing quasi-length (`T_1` is the top, `T_i` has quasi-length `n - i`).
pub fn zigzag_summands(rank: TubeRank) -> Vec<TubeObject> {
    let n = rank.get();
    let mut out = Vec::with_capacity(n as usize - 1);
    for i in 1..=n / 2 {
        for b in [n + 1 - 2 * i, n - 2 * i] {
            if b > 0 {
                out.push(TubeObject::new(rank, i, b).expect("zig-zag coordinates in range"));
            }
        }
    }
    out.sort_by_key(|x| core::cmp::Reverse(x.b()));
    out
}

/// Exchange matrix of the zig-zag object in the order of [`zigzag_summands`]:
/// `b_12 = -2`, `b_21 = 1`, and for `i >= 2` the neighbours `i ± 1` carry
/// `+1` in even rows and `-1` in odd rows.
pub fn zigzag_matrix(rank: TubeRank) -> IntMatrix {
    let size = rank.get() as usize - 1;
    let mut b = IntMatrix::zeros(size, size);
    if size >= 2 {
        b.set(0, 1, -2);
    }
    for row in 1..size {
        // row index is 0-based; T_{row+1} is even iff row is odd
        let sign = if row % 2 == 1 { 1 } else { -1 };
        b.set(row, row - 1, sign);
        if row + 1 < size {
            b.set(row, row + 1, sign);
        }
    }
    b
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    object: MaximalRigid,
    matrix: ExchangeMatrix,
}

impl Seed {
    pub fn new(object: MaximalRigid, matrix: ExchangeMatrix) -> Result<Self> {
        if matrix.order() != object.summands() {
            return Err(Error::InvalidArgument("matrix labels differ from the summands"));
        }
        Ok(Seed { object, matrix })
    }

    pub fn object(&self) -> &MaximalRigid {
        &self.object
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    /// Exchange at summand `k` together with mutation at `k`, re-indexed to
    /// the canonical order of the new object. Also returns the slot the new
    /// summand occupies.
    pub fn mutate(&self, k: usize) -> Result<(Seed, usize)> {
        let (object, slot) = exchange(&self.object, k)?;
        let mutated = self.matrix.fz_mutate(k)?;
        let mut labels = mutated.order.clone();
        labels[k] = object.summands()[slot];
        let relabelled = ExchangeMatrix { order: labels, entries: mutated.entries };
        let matrix = relabelled.reindexed(object.summands())?;
        let worst = matrix.max_abs_entry();
        if worst > MAX_ENTRY {
            return Err(Error::EntryOutOfBounds { value: worst });
        }
        Ok((Seed { object, matrix }, slot))
    }

    pub fn middle_terms(&self, i: usize) -> Result<MiddleTerms> {
        let size = self.matrix.size();
        if i >= size {
            return Err(Error::IndexOutOfRange { index: i, len: size });
        }
        let mut u = Vec::new();
        let mut u_prime = Vec::new();
        for j in 0..size {
            let b = self.matrix.get(i, j);
            let x = self.matrix.order[j];
            if b < 0 {
                u.push((x, (-b) as u32));
            } else if b > 0 {
                u_prime.push((x, b as u32));
            }
        }
        Ok(MiddleTerms { u, u_prime })
    }
}

pub fn initial_seed(rank: TubeRank) -> Seed {
    let zigzag = zigzag_summands(rank);
    let matrix = ExchangeMatrix::new(zigzag.clone(), zigzag_matrix(rank)).expect("square by construction");
    let object = MaximalRigid::new(rank, zigzag).expect("zig-zag object is maximal rigid");
    let matrix = matrix.reindexed(object.summands()).expect("same summands");
    Seed { object, matrix }
}

/// Replaces summand `k` by its other complement. Returns the new object and
/// the canonical index of the new summand.
pub fn exchange(t: &MaximalRigid, k: usize) -> Result<(MaximalRigid, usize)> {
    let removed = *t.summands().get(k).ok_or(Error::IndexOutOfRange { index: k, len: t.len() })?;
    let tbar = t.without(k)?;
    let (x, y) = complements(&tbar)?;
    let other = if x == removed {
        y
    } else if y == removed {
        x
    } else {
        return Err(Error::InvalidArgument("removed summand is not one of the complements"));
    };
    let mut summands = tbar.summands().to_vec();
    let slot = summands.partition_point(|s| *s < other);
    summands.insert(slot, other);
    Ok((MaximalRigid::from_sorted(t.rank(), summands), slot))
}

/// Middle terms of the two exchange triangles of summand `i`, as
/// `(object, multiplicity)` lists: `u` from negative entries of row `i`,
/// `u_prime` from positive ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleTerms {
    pub u: Vec<(TubeObject, u32)>,
    pub u_prime: Vec<(TubeObject, u32)>,
}

impl MiddleTerms {
    pub fn is_disjoint(&self) -> bool {
        self.u.iter().all(|(x, _)| self.u_prime.iter().all(|(y, _)| x != y))
    }
}

/// One exchange `(from, slot) <-> (to, to_slot)`, stored with `from < to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExchangeEdge {
    pub from: usize,
    pub slot: usize,
    pub to: usize,
    pub to_slot: usize,
}

/// All seeds reachable from the zig-zag seed, in canonical node order.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    rank: TubeRank,
    seeds: Vec<Seed>,
    index: BTreeMap<MaximalRigid, usize>,
    /// `neighbors[v][k] = (w, slot in w)` for the exchange of summand `k`.
    neighbors: Vec<Vec<(usize, usize)>>,
}

impl ExchangeGraph {
    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    pub fn seeds(&self) -> &[Seed] {
        &self.seeds
    }

    pub fn node_count(&self) -> usize {
        self.seeds.len()
    }

    pub fn node_of(&self, t: &MaximalRigid) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn seed(&self, t: &MaximalRigid) -> Result<&Seed> {
        self.node_of(t).map(|i| &self.seeds[i]).ok_or(Error::UnknownNode)
    }

    pub fn b_matrix(&self, t: &MaximalRigid) -> Result<&ExchangeMatrix> {
        Ok(self.seed(t)?.matrix())
    }

    pub fn middle_terms(&self, t: &MaximalRigid, i: usize) -> Result<MiddleTerms> {
        self.seed(t)?.middle_terms(i)
    }

    pub fn neighbors(&self, node: usize) -> &[(usize, usize)] {
        &self.neighbors[node]
    }

    pub fn edges(&self) -> Vec<ExchangeEdge> {
        let mut out = Vec::new();
        for (from, nbrs) in self.neighbors.iter().enumerate() {
            for (slot, &(to, to_slot)) in nbrs.iter().enumerate() {
                if from < to {
                    out.push(ExchangeEdge { from, slot, to, to_slot });
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        connected(self.seeds.len(), |v| self.neighbors[v].iter().map(|&(w, _)| w))
    }
}

pub(crate) fn connected<F, I>(len: usize, mut nbrs: F) -> bool
where
    F: FnMut(usize) -> I,
    I: Iterator<Item = usize>,
{
    if len == 0 {
        return true;
    }
    let mut seen = alloc::vec![false; len];
    let mut stack = alloc::vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in nbrs(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == len
}

/// Breadth-first propagation of exchange matrices from the zig-zag seed.
///
/// Each step exchanges a summand, mutates, and re-indexes. Reaching an
/// already known object with a different matrix is reported as
/// [`Error::PathDependence`]; maximal rigid objects never reached are
/// reported as [`Error::Unreachable`].
pub fn build_exchange_graph(rank: TubeRank) -> Result<ExchangeGraph> {
    let start = initial_seed(rank);
    let mut seeds = alloc::vec![start.clone()];
    let mut index = BTreeMap::new();
    index.insert(start.object.clone(), 0usize);
    let mut neighbors: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);

    while let Some(v) = queue.pop_front() {
        let seed = seeds[v].clone();
        let mut row = Vec::with_capacity(seed.object.len());
        for k in 0..seed.object.len() {
            let (next, slot) = seed.mutate(k)?;
            let w = match index.get(&next.object) {
                Some(&w) => {
                    if seeds[w].matrix != next.matrix {
                        return Err(Error::PathDependence { node: w });
                    }
                    w
                }
                None => {
                    let w = seeds.len();
                    index.insert(next.object.clone(), w);
                    seeds.push(next);
                    queue.push_back(w);
                    w
                }
            };
            row.push((w, slot));
        }
        if neighbors.len() <= v {
            neighbors.resize(v + 1, Vec::new());
        }
        neighbors[v] = row;
    }

    let all = enumerate_maximal_rigid(rank)?;
    let missing = all.iter().filter(|t| !index.contains_key(*t)).count();
    if missing > 0 {
        return Err(Error::Unreachable { missing });
    }
    if all.len() != seeds.len() {
        return Err(Error::NotMaximalRigid("exchange produced an object outside the enumeration"));
    }

    // renumber nodes in canonical order
    let mut order: Vec<usize> = (0..seeds.len()).collect();
    order.sort_by(|&x, &y| seeds[x].object.cmp(&seeds[y].object));
    let mut new_id = alloc::vec![0usize; seeds.len()];
    for (new, &old) in order.iter().enumerate() {
        new_id[old] = new;
    }
    let canonical_neighbors =
        order.iter().map(|&old| neighbors[old].iter().map(|&(w, s)| (new_id[w], s)).collect()).collect();
    let mut slots: Vec<Option<Seed>> = seeds.into_iter().map(Some).collect();
    let seeds: Vec<Seed> = order.iter().map(|&old| slots[old].take().expect("each node once")).collect();
    let index = seeds.iter().enumerate().map(|(i, s)| (s.object.clone(), i)).collect();

    Ok(ExchangeGraph { rank, seeds, index, neighbors: canonical_neighbors })
}
