//! Continued fractions in canonical form, quotient sums, and the split
//! search that feeds the spanning-tree-ratio construction.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::{Int, Rat};

/// A canonical continued fraction [a_0; a_1, .., a_s]: a_0 >= 0, a_i >= 1
/// for i >= 1, and a_s >= 2 whenever s >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfExpansion {
    quotients: Vec<u64>,
}

impl CfExpansion {
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    /// Sum of all quotients (a leading zero contributes nothing).
    pub fn qsum(&self) -> u64 {
        self.quotients.iter().sum()
    }

    /// Exact value of the expansion.
    pub fn value(&self) -> Rat {
        let mut it = self.quotients.iter().rev();
        let last = *it.next().expect("expansion is nonempty");
        let mut v = Rat::from_integer(Int::from(last));
        for &q in it {
            v = Rat::from_integer(Int::from(q)) + v.recip();
        }
        v
    }
}

impl std::fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}", self.quotients[0])?;
        for (i, q) in self.quotients.iter().enumerate().skip(1) {
            write!(f, "{} {}", if i == 1 { ";" } else { "," }, q)?;
        }
        write!(f, "]")
    }
}

/// Euclidean expansion of p/q. The division algorithm lands on the canonical
/// form directly: the final quotient is at least 2 unless the expansion is a
/// single term.
pub fn cf_expand(p: u64, q: u64) -> Result<CfExpansion> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    if p == 0 {
        return Err(Error::BadParameters("numerator must be positive".into()));
    }
    let mut quotients = Vec::new();
    let (mut a, mut b) = (p, q);
    loop {
        quotients.push(a / b);
        let r = a % b;
        if r == 0 {
            break;
        }
        a = b;
        b = r;
    }
    debug_assert!(quotients.len() == 1 || *quotients.last().unwrap() >= 2);
    Ok(CfExpansion { quotients })
}

/// s(p/q): the quotient sum of the canonical expansion.
pub fn quotient_sum(p: u64, q: u64) -> Result<u64> {
    Ok(cf_expand(p, q)?.qsum())
}

/// Pick m in [1, B-1] minimizing max(s(m/A), s((B-m)/A)); exhaustive scan
/// when B <= budget, otherwise a fixed-seed sample of `budget` candidates.
/// Ties go to the smaller m. Callers pass reduced A/B with 1 <= B <= A <= 2B.
pub fn ntd_search(a: u64, b: u64, budget: u64) -> Result<u64> {
    if !(1 <= b && b <= a && a <= 2 * b) {
        return Err(Error::BadParameters(format!(
            "ntd_search needs 1 <= B <= A <= 2B, got A={a} B={b}"
        )));
    }
    if b == 1 {
        return Err(Error::NoCandidate);
    }
    let score = |m: u64| -> u64 {
        let s1 = quotient_sum(m, a).expect("m >= 1");
        let s2 = quotient_sum(b - m, a).expect("b - m >= 1");
        s1.max(s2)
    };
    let mut best_m = 1;
    let mut best = score(1);
    if b - 1 <= budget {
        for m in 2..b {
            let s = score(m);
            if s < best {
                best = s;
                best_m = m;
            }
        }
    } else {
        let mut rng = SplitMix64::new(0x6e74_645f_7365 ^ a ^ (b << 17));
        for _ in 0..budget {
            let m = rng.range(1, b - 1);
            let s = score(m);
            if s < best || (s == best && m < best_m) {
                best = s;
                best_m = m;
            }
        }
    }
    Ok(best_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn cf(p: u64, q: u64) -> Vec<u64> {
        cf_expand(p, q).unwrap().quotients().to_vec()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(cf(7, 5), vec![1, 2, 2]);
        assert_eq!(quotient_sum(7, 5).unwrap(), 5);
        assert_eq!(cf(3, 1), vec![3]);
        assert_eq!(cf(5, 2), vec![2, 2]);
        assert_eq!(quotient_sum(7, 3).unwrap(), 5); // [2; 3]
        assert_eq!(quotient_sum(100, 1).unwrap(), 100);
        assert_eq!(cf(8, 5), vec![1, 1, 1, 2]);
        assert_eq!(quotient_sum(8, 5).unwrap(), 5);
        assert_eq!(cf(1, 1), vec![1]);
        assert_eq!(cf(2, 5), vec![0, 2, 2]);
        assert_eq!(quotient_sum(2, 5).unwrap(), 4);
    }

    #[test]
    fn unreduced_inputs_fold_gcd() {
        assert_eq!(cf(6, 4), cf(3, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(cf_expand(3, 0), Err(Error::ZeroDenominator));
        assert!(cf_expand(0, 3).is_err());
        assert_eq!(ntd_search(1, 1, 100), Err(Error::NoCandidate));
        assert!(ntd_search(5, 1, 100).is_err()); // A > 2B
    }

    #[test]
    fn value_round_trip_and_canonical_form() {
        let mut rng = crate::rng::SplitMix64::new(99);
        for _ in 0..10_000 {
            let p = rng.range(1, 1_000_000_000);
            let q = rng.range(1, 1_000_000_000);
            let e = cf_expand(p, q).unwrap();
            assert_eq!(e.value(), Rat::new(Int::from(p), Int::from(q)));
            let qs = e.quotients();
            if qs.len() > 1 {
                assert!(*qs.last().unwrap() >= 2, "trailing 1 in {e}");
                assert!(qs[1..].iter().all(|&x| x >= 1));
            }
        }
    }

    #[test]
    fn ntd_search_matches_exhaustive_oracle() {
        for (a, b) in [(7u64, 5u64), (13, 8), (20, 11), (9, 9), (2, 2)] {
            let m = ntd_search(a, b, 1_000_000).unwrap();
            assert!((1..b).contains(&m));
            let score = |mm: u64| {
                quotient_sum(mm, a)
                    .unwrap()
                    .max(quotient_sum(b - mm, a).unwrap())
            };
            let best = (1..b).map(score).min().unwrap();
            assert_eq!(score(m), best);
            // ties break to the smallest m
            assert!((1..m).all(|mm| score(mm) > best));
        }
    }

    #[test]
    fn ntd_search_forced_case() {
        assert_eq!(ntd_search(2, 2, 10).unwrap(), 1);
        assert_eq!(ntd_search(3, 2, 10).unwrap(), 1);
    }

    #[test]
    fn sampled_search_is_deterministic_and_valid() {
        let a = 2_000_003;
        let b = 1_500_001;
        let m1 = ntd_search(a, b, 500).unwrap();
        let m2 = ntd_search(a, b, 500).unwrap();
        assert_eq!(m1, m2);
        assert!((1..b).contains(&m1));
    }

    #[test]
    fn integer_value_is_single_quotient() {
        let e = cf_expand(42, 6).unwrap();
        assert_eq!(e.quotients(), &[7]);
        assert_eq!(e.value(), Rat::from_integer(Int::from(7)));
        assert!(Rat::one() <= e.value());
    }
}
