//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! Every intermediate entry is a minor of the input, so divisions are exact
//! and no rational arithmetic is needed. Work is done in `i128` with checked
//! operations.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

pub fn rank(m: &IntMatrix) -> Result<usize> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<i128>> =
        (0..rows).map(|i| m.row(i).iter().map(|&v| i128::from(v)).collect()).collect();

    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c];
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let lead = row[c];
            for j in c + 1..cols {
                let num = pivot
                    .checked_mul(row[j])
                    .and_then(|x| lead.checked_mul(pivot_row[j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                row[j] = num / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Ok(rank)
}
