//! The k = 0 equality criterion, the total-equality conditions, and the
//! example matroids that exercise them.
//!
//! The criterion demands one global constant s: every parallel class of
//! every qualifying contraction M/A must split between R and its complement
//! in the same ratio. A class lying entirely on one side kills every s > 0
//! outright.

use crate::bits::SubsetMask;
use crate::counting::{count_profile, ConstraintSpec, CountMode, CountProfile};
use crate::error::{Error, Result};
use crate::matroid::BinaryMatroid;
use crate::{int, Int, Rat};
use num::traits::Pow;
use num::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqualityVerdict {
    /// Every class ratio |Par ∩ R| : |Par ∩ (X-R)| equals s, across all
    /// qualifying contractions.
    Equal { s: Rat },
    /// First witness in lexicographic (A, class) order: either a class on
    /// one side of R only, or a class whose ratio differs from the first
    /// ratio seen.
    Strict { witness: (SubsetMask, usize) },
    /// P(M, R, a) = 0; equality holds trivially at this level.
    Vanishing,
}

/// Decide P(a)^2 = P(a+1) P(a-1) structurally: scan every independent A with
/// |A| = r-2 and |A ∩ R| = a-1 and check the parallel-class ratios of M/A
/// against one global constant.
pub fn equality_criterion(
    m: &BinaryMatroid,
    r_set: SubsetMask,
    a: usize,
) -> Result<EqualityVerdict> {
    let r = m.full_rank();
    if r < 2 || a == 0 || a > r - 1 {
        return Err(Error::BadRange {
            a,
            lo: 1,
            hi: r.saturating_sub(1),
        });
    }
    let profile = count_profile(m, &ConstraintSpec::plain(r_set), CountMode::Bases)?;
    if profile.p(a).is_zero() {
        return Ok(EqualityVerdict::Vanishing);
    }

    let mut s: Option<Rat> = None;
    let mut verdict = None;
    m.for_each_independent_of_size(r - 2, &mut |set| {
        if verdict.is_some() || set.intersect(r_set).card() != a - 1 {
            return;
        }
        let contracted = m.contract(set).expect("enumerated set is independent");
        for class in contracted.parallel_classes() {
            let in_r = class.intersect(r_set).card();
            let out_r = class.minus(r_set).card();
            if in_r == 0 || out_r == 0 {
                verdict = Some(EqualityVerdict::Strict {
                    witness: (set, class.min_element().expect("class is nonempty")),
                });
                return;
            }
            let ratio = Rat::new(int(in_r as u64), int(out_r as u64));
            match &s {
                None => s = Some(ratio),
                Some(s0) if *s0 != ratio => {
                    verdict = Some(EqualityVerdict::Strict {
                        witness: (set, class.min_element().expect("class is nonempty")),
                    });
                    return;
                }
                _ => {}
            }
        }
    })?;
    if let Some(v) = verdict {
        return Ok(v);
    }
    // P(a) > 0 guarantees at least one qualifying A, hence at least one class.
    let s = s.expect("some qualifying contraction exists");
    Ok(EqualityVerdict::Equal { s })
}

/// Flags for the four total-equality conditions, with the preconditions
/// reported alongside rather than assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalEqualityReport {
    pub loopless: bool,
    pub p0_positive: bool,
    pub pr_positive: bool,
    /// P(1)^r = P(0)^{r-1} P(r).
    pub cond_i: bool,
    /// Equality at every level 1 <= a <= r-1.
    pub cond_ii: bool,
    /// Equality at some level.
    pub cond_iii: bool,
    /// One global s > 0 with |Par(x) ∩ R| = s |Par(x) ∩ (X-R)| for all x.
    pub cond_iv: bool,
    /// The constant realizing (iv), when it holds.
    pub s: Option<Rat>,
}

pub fn total_equality_report(m: &BinaryMatroid, r_set: SubsetMask) -> Result<TotalEqualityReport> {
    let profile = count_profile(m, &ConstraintSpec::plain(r_set), CountMode::Bases)?;
    let r = profile.r;
    let p0 = profile.p(0);
    let pr = profile.p(r);

    let cond_i = profile.p(1).pow(r as i32) == p0.clone().pow(r as i32 - 1) * &pr;
    let mut cond_ii = true;
    let mut cond_iii = false;
    for a in 1..r {
        let eq = profile.p(a).pow(2) == profile.p(a + 1) * profile.p(a - 1);
        cond_ii &= eq;
        cond_iii |= eq;
    }
    if r < 2 {
        cond_ii = true;
        cond_iii = false;
    }

    let (cond_iv, s) = global_parallel_ratio(m, r_set);
    Ok(TotalEqualityReport {
        loopless: m.loops().is_empty(),
        p0_positive: !p0.is_zero(),
        pr_positive: !pr.is_zero(),
        cond_i,
        cond_ii,
        cond_iii,
        cond_iv,
        s,
    })
}

/// Condition (iv) on the matroid itself: every parallel class meets both
/// sides of R in one global ratio.
fn global_parallel_ratio(m: &BinaryMatroid, r_set: SubsetMask) -> (bool, Option<Rat>) {
    let mut s: Option<Rat> = None;
    for class in m.parallel_classes() {
        let in_r = class.intersect(r_set).card();
        let out_r = class.minus(r_set).card();
        if in_r == 0 || out_r == 0 {
            return (false, None);
        }
        let ratio = Rat::new(int(in_r as u64), int(out_r as u64));
        match &s {
            None => s = Some(ratio),
            Some(s0) if *s0 != ratio => return (false, None),
            _ => {}
        }
    }
    (s.is_some(), s)
}

/// Successive ratios P(a+1)/P(a) over the nonvanishing window; the sequence
/// is nonincreasing, and it is constant exactly in the total-equality case.
/// Returns the first level of the window together with the ratios.
pub fn ratio_chain(m: &BinaryMatroid, r_set: SubsetMask) -> Result<(usize, Vec<Rat>)> {
    let profile = count_profile(m, &ConstraintSpec::plain(r_set), CountMode::Bases)?;
    Ok(chain_of(&profile))
}

pub(crate) fn chain_of(profile: &CountProfile) -> (usize, Vec<Rat>) {
    let r = profile.r;
    let lo = (0..=r).find(|&a| !profile.p(a).is_zero());
    let Some(lo) = lo else {
        return (0, Vec::new());
    };
    let hi = (0..=r).rev().find(|&a| !profile.p(a).is_zero()).unwrap();
    let mut chain = Vec::new();
    for a in lo..hi {
        debug_assert!(!profile.p(a).is_zero(), "nonvanishing window is contiguous");
        chain.push(profile.p(a + 1) / profile.p(a));
    }
    (lo, chain)
}

/// Duplicate every element of a loopless matroid; R is the original copy.
/// Every parallel class then splits evenly, giving total equality with s = 1.
pub fn build_double_matroid(m: &BinaryMatroid) -> Result<(BinaryMatroid, SubsetMask)> {
    if !m.loops().is_empty() {
        return Err(Error::BadParameters(
            "double matroid requires a loopless matroid".into(),
        ));
    }
    if !m.forbidden().is_empty() {
        return Err(Error::BadParameters(
            "double matroid of a matroid with deletions is not supported".into(),
        ));
    }
    let n = m.n();
    if 2 * n > 64 {
        return Err(Error::BadParameters("doubled ground set exceeds 64".into()));
    }
    let mut cols = m.raw_cols().to_vec();
    cols.extend_from_slice(m.raw_cols());
    let mut labels: Vec<String> = m.labels().to_vec();
    labels.extend(m.labels().iter().map(|l| format!("{l}'")));
    let doubled = BinaryMatroid::new(m.dim(), cols)?.with_labels(labels)?;
    Ok((doubled, SubsetMask::full(n)))
}

/// All of F2^r (zero vector included, the unique loop), with R a hyperplane.
/// Every contraction by an independent A disjoint from R splits its classes
/// evenly, so equality holds at a = 1 even though the profile vanishes at
/// the top level (no basis fits inside the hyperplane).
pub fn build_linear_example(r: usize) -> Result<(BinaryMatroid, SubsetMask)> {
    if !(3..=6).contains(&r) {
        return Err(Error::BadParameters(
            "linear example needs 3 <= r <= 6".into(),
        ));
    }
    let n = 1usize << r;
    let cols: Vec<u64> = (0..n as u64).collect();
    let m = BinaryMatroid::new(r, cols)?;
    let hyperplane = SubsetMask::from_bits((1u64 << (n / 2)) - 1); // top coordinate zero
    Ok((m, hyperplane))
}

/// The combination of the two behaviors: R0 a punctured hyperplane, S0 its
/// complement, and a nonempty subset of S0 duplicated into both sides.
/// Equality holds at a = 1 but fails at a = r-1, with both end levels
/// positive.
pub fn build_combination_example(r: usize, t: usize) -> Result<(BinaryMatroid, SubsetMask)> {
    if !(3..=5).contains(&r) {
        return Err(Error::BadParameters(
            "combination example needs 3 <= r <= 5".into(),
        ));
    }
    let half = 1usize << (r - 1);
    if t < 1 || t > half {
        return Err(Error::BadParameters(format!(
            "duplicated set size must be in [1, {half}]"
        )));
    }
    let n = (1usize << r) - 1 + 2 * t;
    if n > 64 {
        return Err(Error::BadParameters("ground set exceeds 64".into()));
    }
    let r0: Vec<u64> = (1..half as u64).collect(); // hyperplane minus zero
    let s0: Vec<u64> = (half as u64..2 * half as u64).collect();
    let dup: Vec<u64> = s0[..t].to_vec();
    let mut cols = Vec::new();
    cols.extend_from_slice(&r0); // R0
    cols.extend_from_slice(&dup); // R1
    cols.extend_from_slice(&s0); // S0
    cols.extend_from_slice(&dup); // S1
    let m = BinaryMatroid::new(r, cols)?;
    let r_set = SubsetMask::full(r0.len() + t);
    Ok((m, r_set))
}

/// Direct restatement of the comparison P(a)^2 = P(a+1) P(a-1) on a
/// normalized profile; the independent oracle for `equality_criterion`.
pub fn profile_equality(profile_p: &[Rat], a: usize) -> bool {
    profile_p[a].clone().pow(2) == &profile_p[a + 1] * &profile_p[a - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::subsets_of;
    use crate::graph::cycle_graph;

    fn plain_profile(m: &BinaryMatroid, r_set: SubsetMask) -> Vec<Rat> {
        let p = count_profile(m, &ConstraintSpec::plain(r_set), CountMode::Bases).unwrap();
        (0..=p.r).map(|a| p.p(a)).collect()
    }

    #[test]
    fn double_matroid_total_equality() {
        let base = BinaryMatroid::new(2, vec![0b01, 0b10, 0b11]).unwrap();
        let (d, r_set) = build_double_matroid(&base).unwrap();
        assert_eq!(d.n(), 6);
        let report = total_equality_report(&d, r_set).unwrap();
        assert!(report.loopless && report.p0_positive && report.pr_positive);
        assert!(report.cond_i && report.cond_ii && report.cond_iii && report.cond_iv);
        assert_eq!(report.s, Some(Rat::one()));
        for a in 1..d.full_rank() {
            match equality_criterion(&d, r_set, a).unwrap() {
                EqualityVerdict::Equal { s } => assert_eq!(s, Rat::one()),
                v => panic!("expected equality at {a}, got {v:?}"),
            }
        }
        let (lo, chain) = ratio_chain(&d, r_set).unwrap();
        assert_eq!(lo, 0);
        assert!(chain.iter().all(|c| c == &Rat::one()));
    }

    #[test]
    fn linear_example_r3() {
        let (m, r_set) = build_linear_example(3).unwrap();
        assert_eq!(m.n(), 8);
        assert_eq!(m.loops().indices(), vec![0]);
        let p = plain_profile(&m, r_set);
        // frozen from direct enumeration: B = [4, 12, 12, 0]
        assert_eq!(p[0], Rat::from_integer(Int::from(4)));
        assert_eq!(p[1], Rat::from_integer(Int::from(4)));
        assert_eq!(p[2], Rat::from_integer(Int::from(4)));
        assert!(p[3].is_zero(), "no basis inside the hyperplane");
        match equality_criterion(&m, r_set, 1).unwrap() {
            EqualityVerdict::Equal { s } => assert_eq!(s, Rat::one()),
            v => panic!("expected equality at a = 1, got {v:?}"),
        }
        // top-level precondition fails, so the total-equality theorem does
        // not apply here
        let report = total_equality_report(&m, r_set).unwrap();
        assert!(!report.pr_positive);
        assert!(!report.loopless);
    }

    #[test]
    fn combination_example_r3() {
        let (m, r_set) = build_combination_example(3, 1).unwrap();
        assert_eq!(m.n(), 9);
        assert!(m.loops().is_empty());
        let report = total_equality_report(&m, r_set).unwrap();
        assert!(report.p0_positive && report.pr_positive && report.loopless);
        assert!(report.cond_iii, "equality at a = 1");
        assert!(!report.cond_ii, "but not at every level");
        match equality_criterion(&m, r_set, 1).unwrap() {
            EqualityVerdict::Equal { s } => assert_eq!(s, Rat::one()),
            v => panic!("expected equality at a = 1, got {v:?}"),
        }
        let p = plain_profile(&m, r_set);
        assert!(!profile_equality(&p, 2), "profile is strict at a = 2");
        match equality_criterion(&m, r_set, 2).unwrap() {
            EqualityVerdict::Strict { witness: (set, x) } => {
                assert_eq!(set.card(), 1);
                assert!(!m.contract(set).unwrap().is_loop(x));
            }
            v => panic!("expected strict at a = r-1, got {v:?}"),
        }
    }

    #[test]
    fn combination_sizes_follow_parameters() {
        let (m, r_set) = build_combination_example(3, 2).unwrap();
        assert_eq!(m.n(), 11);
        assert_eq!(r_set.card(), 5);
        assert!(build_combination_example(3, 0).is_err());
        assert!(build_combination_example(3, 9).is_err());
    }

    #[test]
    fn criterion_agrees_with_profile_comparison_small() {
        // every binary matroid with d <= 2, n <= 4 (columns nondecreasing),
        // every R, every level
        let mut checked = 0u32;
        for n in 1..=4usize {
            let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
            while let Some(cols) = stack.pop() {
                if cols.len() == n {
                    let m = BinaryMatroid::new(2, cols.clone()).unwrap();
                    let r = m.full_rank();
                    if r < 2 {
                        continue;
                    }
                    for r_set in subsets_of(m.ground_set()) {
                        let p = plain_profile(&m, r_set);
                        for a in 1..r {
                            let verdict = equality_criterion(&m, r_set, a).unwrap();
                            if p[a].is_zero() {
                                assert_eq!(verdict, EqualityVerdict::Vanishing);
                                continue;
                            }
                            let eq = profile_equality(&p, a);
                            match verdict {
                                EqualityVerdict::Equal { ref s } => {
                                    assert!(eq, "criterion says equal, profile strict");
                                    // s matches the consecutive profile ratios
                                    assert_eq!(p[a + 1].clone(), s * &p[a]);
                                    assert_eq!(p[a].clone(), s * &p[a - 1]);
                                }
                                EqualityVerdict::Strict { .. } => {
                                    assert!(!eq, "criterion says strict, profile equal")
                                }
                                EqualityVerdict::Vanishing => unreachable!(),
                            }
                            checked += 1;
                        }
                    }
                    continue;
                }
                let start = *cols.last().unwrap_or(&0);
                for c in start..4u64 {
                    let mut next = cols.clone();
                    next.push(c);
                    stack.push(next);
                }
            }
        }
        assert!(checked > 200, "exercised {checked} instances");
    }

    #[test]
    fn ratio_chain_nonincreasing() {
        let m = BinaryMatroid::from_graph(&cycle_graph(3)).unwrap();
        let (lo, chain) = ratio_chain(&m, SubsetMask::singleton(0)).unwrap();
        assert_eq!(lo, 0);
        for w in chain.windows(2) {
            assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn bad_range_rejected() {
        let m = BinaryMatroid::new(2, vec![0b01, 0b10]).unwrap();
        assert!(equality_criterion(&m, SubsetMask::EMPTY, 0).is_err());
        assert!(equality_criterion(&m, SubsetMask::EMPTY, 2).is_err());
    }

    #[test]
    fn double_matroid_rejects_loops() {
        let m = BinaryMatroid::new(2, vec![0b00, 0b01]).unwrap();
        assert!(build_double_matroid(&m).is_err());
    }
}
