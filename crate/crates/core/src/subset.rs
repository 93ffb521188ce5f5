use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices of some finite group.
///
/// The universe size is the order of the ambient group. Subgroups and
/// generating sets are both carried by this type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    bits: FixedBitSet,
}

impl ElementSubset {
    pub fn empty(universe: usize) -> Self {
        ElementSubset {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSubset { bits }
    }

    /// Panics if an index is outside the universe.
    pub fn from_elements(universe: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: usize) -> bool {
        assert!(e < self.bits.len(), "element {e} outside universe {}", self.bits.len());
        !self.bits.put(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &ElementSubset) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSubset { bits }
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn cmp_lex(&self, other: &ElementSubset) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_is_on_member_lists() {
        let a = ElementSubset::from_elements(8, [0, 1, 7]);
        let b = ElementSubset::from_elements(8, [0, 2]);
        assert_eq!(a.cmp_lex(&b), Ordering::Less);
        assert_eq!(b.cmp_lex(&a), Ordering::Greater);
        assert_eq!(a.cmp_lex(&a), Ordering::Equal);
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = ElementSubset::empty(4);
        assert!(s.insert(2));
        assert!(!s.insert(2));
        assert_eq!(s.len(), 1);
        assert!(s.is_subset(&ElementSubset::full(4)));
    }
}
