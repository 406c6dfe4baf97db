//! Feasibility of prescribed intersection sizes: the rank inequalities over
//! all block unions, the nonvanishing window for the k = 0 profile, and a
//! backtracking witness search that serves as the independent oracle.

use crate::bits::SubsetMask;
use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;

/// A set partition of the ground set with one prescribed intersection size
/// per block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    blocks: Vec<SubsetMask>,
    c: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(n: usize, blocks: Vec<SubsetMask>, c: Vec<usize>) -> Result<Self> {
        if blocks.len() != c.len() || blocks.is_empty() {
            return Err(Error::NotAPartition);
        }
        let mut union = SubsetMask::EMPTY;
        for b in &blocks {
            if !b.is_disjoint(union) {
                return Err(Error::NotAPartition);
            }
            union = union.union(*b);
        }
        if union != SubsetMask::full(n) {
            return Err(Error::NotAPartition);
        }
        Ok(PartitionSpec { blocks, c })
    }

    pub fn blocks(&self) -> &[SubsetMask] {
        &self.blocks
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn arity(&self) -> usize {
        self.blocks.len()
    }
}

/// True exactly when an independent set with the prescribed block
/// intersections exists: rk of every block union must dominate the
/// corresponding partial sum. The 2^l unions are built incrementally from
/// the lowest set bit.
pub fn feasible(m: &BinaryMatroid, p: &PartitionSpec) -> Result<bool> {
    let l = p.arity();
    if l > 20 {
        return Err(Error::SizeLimit { n: l, limit: 20 });
    }
    let mut union = vec![SubsetMask::EMPTY; 1 << l];
    let mut csum = vec![0usize; 1 << l];
    for idx in 1usize..(1 << l) {
        let low = idx.trailing_zeros() as usize;
        let rest = idx & (idx - 1);
        union[idx] = union[rest].union(p.blocks[low]);
        csum[idx] = csum[rest] + p.c[low];
        if m.rank(union[idx]) < csum[idx] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The window of levels with P(M, R, a) > 0:
/// r - rk(X - R) <= a <= rk(R). This is the two-block specialization of the
/// partition criterion (blocks R and X - R with sizes a and r - a), whose
/// three inequalities collapse to exactly these bounds. May be empty
/// (lo > hi) when R and its complement both have low rank.
pub fn nonvanishing_range(m: &BinaryMatroid, r_set: SubsetMask) -> (usize, usize) {
    let r = m.full_rank();
    let lo = r - m.rank(r_set.complement(m.n()));
    let hi = m.rank(r_set);
    (lo, hi)
}

/// An independent set realizing all the prescribed intersection sizes, or
/// None; backtracking over elements grouped by block, first hit in
/// lexicographic order.
pub fn witness(m: &BinaryMatroid, p: &PartitionSpec) -> Result<Option<SubsetMask>> {
    let limit = crate::brute_limit();
    if m.n() > limit {
        return Err(Error::SizeLimit { n: m.n(), limit });
    }
    fn search(
        m: &BinaryMatroid,
        p: &PartitionSpec,
        block: usize,
        taken: SubsetMask,
    ) -> Option<SubsetMask> {
        if block == p.arity() {
            return Some(taken);
        }
        let pool = p.blocks[block].indices();
        pick(m, p, block, &pool, 0, p.c[block], taken)
    }
    fn pick(
        m: &BinaryMatroid,
        p: &PartitionSpec,
        block: usize,
        pool: &[usize],
        from: usize,
        left: usize,
        taken: SubsetMask,
    ) -> Option<SubsetMask> {
        if left == 0 {
            return search(m, p, block + 1, taken);
        }
        if pool.len() - from < left {
            return None;
        }
        for k in from..pool.len() {
            let next = taken.insert(pool[k]);
            if m.is_independent(next) {
                if let Some(w) = pick(m, p, block, pool, k + 1, left - 1, next) {
                    return Some(w);
                }
            }
        }
        None
    }
    Ok(search(m, p, 0, SubsetMask::EMPTY))
}
