use std::cmp::Ordering;
use std::fmt;

use super::{FiniteGroup, GroupError};

/// Fixed-capacity bitset over element ids.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(capacity: usize) -> Self {
        Self { words: vec![0; capacity.div_ceil(64)] }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Returns `true` if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A subgroup of a [`FiniteGroup`], identified by its member set.
///
/// Ordering is canonical: by order, then lexicographically by the sorted
/// member list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    bits: BitSet,
    members: Vec<usize>,
    group_order: usize,
}

impl Subgroup {
    /// Checks that `members` is a subgroup of `group`.
    pub fn from_members(group: &FiniteGroup, members: &[usize]) -> Result<Self, GroupError> {
        let mut bits = BitSet::new(group.order());
        for &m in members {
            if m >= group.order() {
                return Err(GroupError::NotASubgroup);
            }
            bits.insert(m);
        }
        if !bits.contains(0) {
            return Err(GroupError::NotASubgroup);
        }
        // Finite: closure under products implies closure under inverses.
        for a in bits.iter() {
            for b in bits.iter() {
                if !bits.contains(group.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Self::from_bits_unchecked(bits, group.order()))
    }

    pub(crate) fn from_bits_unchecked(bits: BitSet, group_order: usize) -> Self {
        let members = bits.iter().collect();
        Self { bits, members, group_order }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn contains(&self, g: usize) -> bool {
        self.bits.contains(g)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// `[G : H]`.
    pub fn index(&self) -> usize {
        self.group_order / self.members.len()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Self::from_bits_unchecked(self.bits.intersection(&other.bits), self.group_order)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members.len().cmp(&other.members.len()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut b = BitSet::new(130);
        assert!(b.insert(0));
        assert!(b.insert(129));
        assert!(!b.insert(129));
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 129]);
        assert_eq!(b.len(), 2);
        let mut c = BitSet::new(130);
        c.insert(129);
        assert!(c.is_subset(&b));
        assert!(!b.is_subset(&c));
        assert_eq!(b.intersection(&c), c);
    }

    #[test]
    fn membership_checks() {
        let z4 = FiniteGroup::cyclic(4);
        let h = Subgroup::from_members(&z4, &[0, 2]).unwrap();
        assert_eq!((h.order(), h.index()), (2, 2));
        assert_eq!(Subgroup::from_members(&z4, &[0, 1]), Err(GroupError::NotASubgroup));
        assert_eq!(Subgroup::from_members(&z4, &[2]), Err(GroupError::NotASubgroup));
        assert_eq!(Subgroup::from_members(&z4, &[0, 9]), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn canonical_order() {
        let z6 = FiniteGroup::cyclic(6);
        let a = Subgroup::from_members(&z6, &[0, 3]).unwrap();
        let b = Subgroup::from_members(&z6, &[0, 2, 4]).unwrap();
        let one = z6.trivial_subgroup();
        let mut v = vec![z6.whole(), b.clone(), one.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![one, a, b, z6.whole()]);
    }
}
