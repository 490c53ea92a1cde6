//! Explicit nilpotent representations of the cyclic quiver, used as an
//! independent check on [`hom_dim_tube`](crate::tube::hom_dim_tube).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::linalg;
use crate::matrix::IntMatrix;
use crate::tube::{same_rank, TubeObject, TubeRank};

/// Representation of the uniserial `(a, b)` on the cyclic quiver with arrows
/// `v -> v - 1`.
///
/// Basis vectors `v_a, ..., v_{a+b-1}` sit at vertices `a, ..., a+b-1` (mod n);
/// the arrows send `v_j` to `v_{j-1}` and kill `v_a`, so the socle is the
/// simple at vertex `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentRep {
    rank: TubeRank,
    dims: Vec<usize>,
    /// `arrows[v]` maps the space at vertex `v + 1` to the space at vertex
    /// `v` (0-based, cyclically), shape `dims[v - 1] x dims[v]`.
    arrows: Vec<IntMatrix>,
}

impl NilpotentRep {
    pub fn rank(&self) -> TubeRank {
        self.rank
    }

    /// Per-vertex dimensions, index 0 is vertex 1.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Matrix of the arrow leaving vertex `v` (1-based).
    pub fn arrow(&self, v: u32) -> &IntMatrix {
        &self.arrows[(v - 1) as usize]
    }

    fn prev(&self, v: usize) -> usize {
        (v + self.dims.len() - 1) % self.dims.len()
    }

    /// Composite of the `n` arrows once around the cycle starting and ending
    /// at vertex `v` (1-based), raised to the given power.
    pub fn cycle_power(&self, v: u32, power: usize) -> IntMatrix {
        let n = self.dims.len();
        let start = (v - 1) as usize;
        let mut acc = identity(self.dims[start]);
        let mut at = start;
        for _ in 0..n * power {
            acc = mul(&self.arrows[at], &acc);
            at = self.prev(at);
        }
        acc
    }
}

fn identity(k: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(k, k);
    for i in 0..k {
        m.set(i, i, 1);
    }
    m
}

fn mul(x: &IntMatrix, y: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(x.rows(), y.cols());
    for i in 0..x.rows() {
        for j in 0..y.cols() {
            let s = (0..x.cols()).map(|k| x.get(i, k) * y.get(k, j)).sum();
            out.set(i, j, s);
        }
    }
    out
}

pub fn build_rep(x: &TubeObject) -> NilpotentRep {
    let n = x.rank().get() as usize;
    let a0 = (x.a() - 1) as usize;
    let len = x.b() as usize;

    // (vertex, local index) of each basis vector v_{a+j}
    let mut dims = vec![0usize; n];
    let mut slots = Vec::with_capacity(len);
    for j in 0..len {
        let v = (a0 + j) % n;
        slots.push((v, dims[v]));
        dims[v] += 1;
    }

    let mut arrows: Vec<IntMatrix> =
        (0..n).map(|v| IntMatrix::zeros(dims[(v + n - 1) % n], dims[v])).collect();
    for j in 1..len {
        let (v, col) = slots[j];
        let (w, row) = slots[j - 1];
        debug_assert_eq!(w, (v + n - 1) % n);
        arrows[v].set(row, col, 1);
    }
    NilpotentRep { rank: x.rank(), dims, arrows }
}

/// `dim Hom(X, Y)` as the nullity of the intertwiner equations between the
/// explicit representations of `X` and `Y`.
///
/// Unknowns are the entries of the per-vertex maps `f_v: X_v -> Y_v`; for
/// each arrow `v -> v - 1` the square `Y(v) f_v = f_{v-1} X(v)` must commute.
pub fn hom_dim_oracle(x: &TubeObject, y: &TubeObject) -> Result<u32> {
    same_rank(x, y)?;
    let rx = build_rep(x);
    let ry = build_rep(y);
    let n = rx.dims.len();

    // offset[v] = index of f_v[0][0] among the unknowns, f_v row-major (Y_v x X_v)
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + ry.dims[v] * rx.dims[v];
    }
    let unknowns = offset[n];
    if unknowns == 0 {
        return Ok(0);
    }
    let var = |v: usize, i: usize, k: usize| offset[v] + i * rx.dims[v] + k;

    let mut equations: Vec<Vec<i64>> = Vec::new();
    for v in 0..n {
        let w = (v + n - 1) % n;
        let ya = &ry.arrows[v];
        let xa = &rx.arrows[v];
        for i in 0..ry.dims[w] {
            for k in 0..rx.dims[v] {
                let mut eq = vec![0i64; unknowns];
                for m in 0..ry.dims[v] {
                    eq[var(v, m, k)] += ya.get(i, m);
                }
                for m in 0..rx.dims[w] {
                    eq[var(w, i, m)] -= xa.get(m, k);
                }
                if eq.iter().any(|&c| c != 0) {
                    equations.push(eq);
                }
            }
        }
    }
    let rank = if equations.is_empty() { 0 } else { linalg::rank(&IntMatrix::from_rows(&equations)?)? };
    Ok((unknowns - rank) as u32)
}
