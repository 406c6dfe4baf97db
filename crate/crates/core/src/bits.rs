//! Subsets of a ground set of up to 64 elements, packed into a word.

use std::fmt;

/// A subset of `{0, .., n-1}` as a bit mask. Element `i` is present when bit
/// `i` is set. Houses every ground-set subset in the library (R, the S_i
/// blocks, independent sets, bases).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            SubsetMask(!0)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < 64);
        SubsetMask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < 64);
            bits |= 1u64 << i;
        }
        SubsetMask(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        assert!(i < 64);
        SubsetMask(self.0 | (1u64 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        assert!(i < 64);
        SubsetMask(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).minus(self)
    }

    /// Indices of the members, ascending.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All subsets of `universe`, ascending by packed value.
pub fn subsets_of(universe: SubsetMask) -> Vec<SubsetMask> {
    let u = universe.bits();
    let mut out = Vec::with_capacity(1 << universe.card());
    let mut s = 0u64;
    loop {
        out.push(SubsetMask(s));
        if s == u {
            break;
        }
        s = (s.wrapping_sub(u)) & u;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_basic_ops() {
        let a = SubsetMask::from_indices([0, 2, 5]);
        assert_eq!(a.card(), 3);
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.indices(), vec![0, 2, 5]);
        assert_eq!(a.minus(SubsetMask::singleton(2)).indices(), vec![0, 5]);
        assert_eq!(a.complement(6).indices(), vec![1, 3, 4]);
        assert_eq!(format!("{a}"), "{0,2,5}");
    }

    #[test]
    fn subset_enumeration_is_complete() {
        let u = SubsetMask::from_indices([1, 3]);
        let subs = subsets_of(u);
        assert_eq!(subs.len(), 4);
        assert!(subs.iter().all(|s| s.is_subset_of(u)));
    }

    #[test]
    fn full_mask_boundaries() {
        assert_eq!(SubsetMask::full(0).card(), 0);
        assert_eq!(SubsetMask::full(64).card(), 64);
    }
}
