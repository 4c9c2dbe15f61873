//! Set families over a 1-based element universe.

use crate::error::Error;
use crate::set::{ElemSet, MAX_UNIVERSE};
use crate::Result;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetFamily {
    universe: u32,
    sets: Vec<ElemSet>,
}

impl SetFamily {
    /// `sets` must be non-empty subsets of `1..=universe`.
    pub fn new(universe: u32, sets: Vec<Vec<u32>>) -> Result<Self> {
        if universe > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe));
        }
        let mut out = Vec::with_capacity(sets.len());
        for s in sets {
            if s.is_empty() {
                return Err(Error::Parse { line: 0, msg: "empty set in family".into() });
            }
            for &e in &s {
                if e < 1 || e > universe {
                    return Err(Error::OutOfRange { id: e, max: universe });
                }
            }
            out.push(ElemSet::from_elems(s));
        }
        Ok(SetFamily { universe, sets: out })
    }

    pub fn from_sets(universe: u32, sets: Vec<ElemSet>) -> Result<Self> {
        Self::new(universe, sets.into_iter().map(|s| s.to_vec()).collect())
    }

    pub fn universe(&self) -> u32 {
        self.universe
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    /// Largest set size; 0 for an empty family.
    pub fn max_set_size(&self) -> u32 {
        self.sets.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// `x` intersects every set.
    pub fn hits_all(&self, x: ElemSet) -> bool {
        self.sets.iter().all(|s| s.intersects(x))
    }

    /// First set disjoint from `x`, in family order.
    pub fn first_unhit(&self, x: ElemSet) -> Option<ElemSet> {
        self.sets.iter().copied().find(|s| !s.intersects(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hitting() {
        let f = SetFamily::new(4, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert!(f.hits_all(ElemSet::from_elems([2])));
        assert!(f.hits_all(ElemSet::from_elems([1, 3])));
        assert!(!f.hits_all(ElemSet::from_elems([1])));
        assert_eq!(f.first_unhit(ElemSet::from_elems([1])), Some(ElemSet::from_elems([2, 3])));
        assert_eq!(f.max_set_size(), 2);
    }

    #[test]
    fn rejects_empty_set_and_out_of_range() {
        assert!(SetFamily::new(3, vec![vec![]]).is_err());
        assert!(SetFamily::new(3, vec![vec![4]]).is_err());
        // Empty family is hit by anything, including the empty set.
        let f = SetFamily::new(3, vec![]).unwrap();
        assert!(f.hits_all(ElemSet::EMPTY));
    }
}
