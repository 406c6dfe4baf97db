//! Constrained basis and independent-set counting, normalized profiles, and
//! the exact log-concavity verdicts built on them.
//!
//! Counting happens by filtered enumeration, never by determinant tricks, so
//! this module is the independent oracle against which everything else is
//! cross-checked (the matrix-tree path in `graph` is the only non-enumerative
//! counter and is itself tested against it).

use crate::bits::SubsetMask;
use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;
use crate::{int, Int, Rat};
use num::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Bases,
    IndependentSets,
}

/// The slicing data: a distinguished subset R and k disjoint blocks S_i with
/// prescribed intersection sizes c_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSpec {
    r_set: SubsetMask,
    blocks: Vec<SubsetMask>,
    c: Vec<usize>,
}

impl ConstraintSpec {
    pub fn new(r_set: SubsetMask, blocks: Vec<SubsetMask>, c: Vec<usize>) -> Result<Self> {
        if blocks.len() != c.len() {
            return Err(Error::BadParameters(format!(
                "{} blocks but {} intersection sizes",
                blocks.len(),
                c.len()
            )));
        }
        let mut seen = r_set;
        for b in &blocks {
            if !b.is_disjoint(seen) {
                return Err(Error::OverlappingConstraints);
            }
            seen = seen.union(*b);
        }
        Ok(ConstraintSpec { r_set, blocks, c })
    }

    /// k = 0 slicing by R alone.
    pub fn plain(r_set: SubsetMask) -> Self {
        ConstraintSpec {
            r_set,
            blocks: Vec::new(),
            c: Vec::new(),
        }
    }

    pub fn r_set(&self) -> SubsetMask {
        self.r_set
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

    pub fn c_total(&self) -> usize {
        self.c.iter().sum()
    }

    fn matches(&self, set: SubsetMask) -> bool {
        self.blocks
            .iter()
            .zip(&self.c)
            .all(|(&s, &ci)| set.intersect(s).card() == ci)
    }
}

/// Exact counts by level `a = |A ∩ R|`, with their multinomial normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountProfile {
    pub mode: CountMode,
    /// Rank of the matroid.
    pub r: usize,
    /// Free rank n - c_1 - .. - c_k; the normalization degree in
    /// independent-set mode.
    pub m: usize,
    counts: Vec<Int>,
    normalized: Vec<Rat>,
}

impl CountProfile {
    pub fn count(&self, a: usize) -> Int {
        self.counts.get(a).cloned().unwrap_or_else(Int::zero)
    }

    /// Signed-index variant; counts vanish outside [0, r].
    pub fn count_at(&self, a: i64) -> Int {
        if a < 0 {
            Int::zero()
        } else {
            self.count(a as usize)
        }
    }

    pub fn p(&self, a: usize) -> Rat {
        self.normalized.get(a).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn p_at(&self, a: i64) -> Rat {
        if a < 0 {
            Rat::zero()
        } else {
            self.p(a as usize)
        }
    }

    pub fn levels(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[Int] {
        &self.counts
    }

    pub fn normalized(&self) -> &[Rat] {
        &self.normalized
    }
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut v = Int::one();
    for i in 0..k.min(n - k) {
        v = v * int((n - i) as u64) / int((i + 1) as u64);
    }
    v
}

/// Multinomial coefficient r! / (parts_0! .. parts_j!); zero unless the
/// parts sum to exactly `r`.
pub fn multinomial(r: usize, parts: &[usize]) -> Int {
    if parts.iter().sum::<usize>() != r {
        return Int::zero();
    }
    let mut v = Int::one();
    let mut rest = r;
    for &p in parts {
        v *= binomial(rest, p);
        rest -= p;
    }
    v
}

pub fn factorial(n: usize) -> Int {
    (1..=n as u64).map(Int::from).product()
}

/// Count bases (or independent sets) of `m` filtered by the slicing data,
/// for every level at once.
///
/// In independent-set mode the level set R is forced to the complement of
/// the union of the blocks, and an independent set contributes to level
/// `a = |A ∩ R|` (so |A| = a + c_1 + .. + c_k).
pub fn count_profile(
    m: &BinaryMatroid,
    spec: &ConstraintSpec,
    mode: CountMode,
) -> Result<CountProfile> {
    let r = m.full_rank();
    match mode {
        CountMode::Bases => {
            let mut counts = vec![0u64; r + 1];
            m.for_each_basis(|b| {
                if spec.matches(b) {
                    counts[b.intersect(spec.r_set).card()] += 1;
                }
            })?;
            let counts: Vec<Int> = counts.into_iter().map(Int::from).collect();
            let normalized = (0..=r)
                .map(|a| normalize_bases(&counts[a], r, a, spec.c()))
                .collect();
            Ok(CountProfile {
                mode,
                r,
                m: m.n().saturating_sub(spec.c_total()),
                counts,
                normalized,
            })
        }
        CountMode::IndependentSets => {
            let c_total = spec.c_total();
            let r_forced = {
                let mut union = SubsetMask::EMPTY;
                for b in spec.blocks() {
                    union = union.union(*b);
                }
                union.complement(m.n())
            };
            let levels = r.saturating_sub(c_total);
            let mut counts = vec![0u64; levels + 1];
            m.for_each_independent(&mut |s| {
                if spec.matches(s) {
                    let a = s.intersect(r_forced).card();
                    debug_assert_eq!(a + c_total, s.card());
                    counts[a] += 1;
                }
            })?;
            let counts: Vec<Int> = counts.into_iter().map(Int::from).collect();
            let free_rank = m.n() - c_total;
            let normalized = counts
                .iter()
                .enumerate()
                .map(|(a, v)| {
                    let denom = binomial(free_rank, a);
                    if denom.is_zero() {
                        Rat::zero()
                    } else {
                        Rat::new(v.clone(), denom)
                    }
                })
                .collect();
            Ok(CountProfile {
                mode,
                r,
                m: free_rank,
                counts,
                normalized,
            })
        }
    }
}

fn normalize_bases(count: &Int, r: usize, a: usize, c: &[usize]) -> Rat {
    let c_total: usize = c.iter().sum();
    if a + c_total > r {
        debug_assert!(count.is_zero());
        return Rat::zero();
    }
    let upsilon = r - a - c_total;
    let mut parts = vec![a];
    parts.extend_from_slice(c);
    parts.push(upsilon);
    let denom = multinomial(r, &parts);
    debug_assert!(!denom.is_zero());
    Rat::new(count.clone(), denom)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Strict,
    Equal,
    Vanishing,
}

/// Exact comparison of P(a)^2 against P(a+1) P(a-1). `Vanishing` flags the
/// levels where the middle term is zero and equality holds trivially.
pub fn sy_verdict(m: &BinaryMatroid, spec: &ConstraintSpec, a: usize) -> Result<Verdict> {
    let profile = count_profile(m, spec, CountMode::Bases)?;
    let r = profile.r;
    if r < 2 || a == 0 || a > r - 1 {
        return Err(Error::BadRange {
            a,
            lo: 1,
            hi: r.saturating_sub(1),
        });
    }
    verdict_from_triple(
        &profile.p(a),
        &profile.p(a + 1),
        &profile.p(a - 1),
        "Stanley-Yan",
    )
}

fn verdict_from_triple(mid: &Rat, up: &Rat, down: &Rat, which: &str) -> Result<Verdict> {
    if mid.is_zero() {
        return Ok(Verdict::Vanishing);
    }
    let lhs = mid * mid;
    let rhs = up * down;
    use std::cmp::Ordering::*;
    match lhs.cmp(&rhs) {
        Greater => Ok(Verdict::Strict),
        Equal => Ok(Verdict::Equal),
        Less => panic!("{which} log-concavity violated: this is a bug"),
    }
}

/// rho(M, x) = B(M - x) / B(M / x), with B(M - x) counted as the bases of M
/// avoiding x (zero for coloops). Always at most n.
pub fn basis_ratio(m: &BinaryMatroid, x: usize) -> Result<Rat> {
    if m.is_loop(x) {
        return Err(Error::LoopArgument(x));
    }
    let del = m.count_bases_avoiding(SubsetMask::singleton(x))?;
    let con = m.contract(SubsetMask::singleton(x))?.count_bases()?;
    debug_assert!(!con.is_zero(), "x is a non-loop, so some basis contains it");
    let rho = Rat::new(del, con);
    assert!(
        rho <= Rat::from_integer(int(m.n() as u64)),
        "basis ratio exceeds the ground-set size"
    );
    Ok(rho)
}

/// B(M) recovered as the telescoping product (1 + rho(M_0, x_1)) (1 + ..)
/// over a greedy basis, where M_{i+1} = M_i / x_{i+1}.
pub fn count_via_ratio_product(m: &BinaryMatroid) -> Result<Int> {
    let basis = m.greedy_basis();
    let mut acc = Rat::one();
    let mut current = m.clone();
    for x in basis.iter() {
        let rho = basis_ratio(&current, x)?;
        acc *= Rat::one() + rho;
        current = current.contract(SubsetMask::singleton(x))?;
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

/// Exact verdict on the generalized ultra-log-concave inequality
/// I(a)^2 >= (1 + 1/a)(1 + 1/(m-a)) I(a+1) I(a-1) for the constrained
/// independent-set counts.
pub fn gen_mason_verdict(m: &BinaryMatroid, spec: &ConstraintSpec, a: usize) -> Result<Verdict> {
    let profile = count_profile(m, spec, CountMode::IndependentSets)?;
    let free = profile.m;
    let r = profile.r;
    let hi = r.saturating_sub(1).min(free.saturating_sub(1));
    if a == 0 || a > hi {
        return Err(Error::BadRange { a, lo: 1, hi });
    }
    // The normalized profile I(a)/binom(m, a) turns the factor into plain
    // log-concavity.
    verdict_from_triple(
        &profile.p(a),
        &profile.p(a + 1),
        &profile.p(a - 1),
        "generalized Mason",
    )
}
