//! Maximal clique enumeration (Bron–Kerbosch with pivoting) on small dense
//! graphs given by a symmetric adjacency predicate.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn empty(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    fn and_not(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

/// All maximal cliques of the graph on `0..len` with edges `adjacent(i, j)`
/// (queried for `i < j` only). Each clique is sorted; the list is sorted.
pub fn maximal_cliques<F>(len: usize, mut adjacent: F) -> Vec<Vec<usize>>
where
    F: FnMut(usize, usize) -> bool,
{
    let mut nbrs: Vec<BitSet> = (0..len).map(|_| BitSet::empty(len)).collect();
    for i in 0..len {
        for j in i + 1..len {
            if adjacent(i, j) {
                nbrs[i].insert(j);
                nbrs[j].insert(i);
            }
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    expand(&nbrs, &mut current, BitSet::full(len), BitSet::empty(len), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    nbrs: &[BitSet],
    current: &mut Vec<usize>,
    mut candidates: BitSet,
    mut excluded: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| nbrs[u].and(&candidates).count())
        .expect("candidates is non-empty");
    let branch: Vec<usize> = candidates.and_not(&nbrs[pivot]).iter().collect();
    for v in branch {
        current.push(v);
        expand(nbrs, current, candidates.and(&nbrs[v]), excluded.and(&nbrs[v]), out);
        current.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}
