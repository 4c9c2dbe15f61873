//! Element sets over a 1-based universe, backed by a 128-bit mask.
//!
//! Universe elements are the integers `1..=n` with `n <= MAX_UNIVERSE`.
//! Element `i` occupies bit `i - 1`.  All search state (visited sets, BFS
//! frontiers) is keyed by the raw mask, which keeps hashing and equality
//! cheap and deterministic.

/// Largest universe any structure in this crate may have.
pub const MAX_UNIVERSE: u32 = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_mask(mask: u128) -> Self {
        ElemSet(mask)
    }

    pub fn mask(self) -> u128 {
        self.0
    }

    /// Set of all elements `1..=n`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == 0 {
            ElemSet(0)
        } else {
            ElemSet(u128::MAX >> (MAX_UNIVERSE - n))
        }
    }

    pub fn singleton(id: u32) -> Self {
        debug_assert!(id >= 1 && id <= MAX_UNIVERSE);
        ElemSet(1u128 << (id - 1))
    }

    pub fn from_elems<I: IntoIterator<Item = u32>>(elems: I) -> Self {
        let mut s = ElemSet(0);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn contains(self, id: u32) -> bool {
        id >= 1 && id <= MAX_UNIVERSE && self.0 >> (id - 1) & 1 == 1
    }

    pub fn insert(&mut self, id: u32) {
        debug_assert!(id >= 1 && id <= MAX_UNIVERSE);
        self.0 |= 1u128 << (id - 1);
    }

    pub fn remove(&mut self, id: u32) {
        debug_assert!(id >= 1 && id <= MAX_UNIVERSE);
        self.0 &= !(1u128 << (id - 1));
    }

    pub fn with(self, id: u32) -> Self {
        let mut s = self;
        s.insert(id);
        s
    }

    pub fn without(self, id: u32) -> Self {
        let mut s = self;
        s.remove(id);
        s
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending iterator over the element ids.
    pub fn iter(self) -> impl Iterator<Item = u32> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let id = mask.trailing_zeros() + 1;
                mask &= mask - 1;
                Some(id)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Ordering used for enumeration output: by cardinality, then by the
    /// ascending element list.
    pub fn size_lex_key(self) -> (u32, Vec<u32>) {
        (self.len(), self.to_vec())
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<u32> for ElemSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        ElemSet::from_elems(iter)
    }
}
