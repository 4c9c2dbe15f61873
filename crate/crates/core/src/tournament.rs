//! Tournaments: complete orientations of K_n.
//!
//! The element universe of a tournament is its arc set.  Arcs are numbered
//! by their underlying unordered pair: pairs `{a, b}` with `a < b` sorted
//! lexicographically get ids `1..=n(n-1)/2`.  The id of an arc is therefore
//! stable under reorientation, which is what the minimal feedback arc set
//! enumerator relies on.

use crate::error::Error;
use crate::set::{ElemSet, MAX_UNIVERSE};
use crate::Result;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tournament {
    n: u32,
    /// `forward[id-1]` is true when pair `(a, b)` with `a < b` is oriented
    /// `a -> b`.
    forward: Vec<bool>,
}

impl Tournament {
    /// `arcs` must orient every unordered pair exactly once.
    pub fn new(n: u32, arcs: Vec<(u32, u32)>) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let m = (n as usize) * (n as usize - 1) / 2;
        if n >= 2 && m as u32 > MAX_UNIVERSE {
            // The arc universe itself must fit in an ElemSet.
            return Err(Error::UniverseTooLarge(m as u32));
        }
        let mut forward = vec![None; m];
        for (u, v) in arcs {
            for id in [u, v] {
                if id < 1 || id > n {
                    return Err(Error::OutOfRange { id, max: n });
                }
            }
            if u == v {
                return Err(Error::Parse { line: 0, msg: format!("arc {u} -> {v} is a loop") });
            }
            let idx = pair_index(n, u.min(v), u.max(v)) - 1;
            if forward[idx as usize].is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("pair {{{}, {}}} oriented twice", u.min(v), u.max(v)),
                });
            }
            forward[idx as usize] = Some(u < v);
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("pair with id {} not oriented", i + 1),
                })
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Tournament { n, forward })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of arcs, i.e. the size of the element universe.
    pub fn arc_count(&self) -> u32 {
        self.forward.len() as u32
    }

    /// Arc id of the unordered pair `{u, v}`.
    pub fn arc_id(&self, u: u32, v: u32) -> u32 {
        pair_index(self.n, u.min(v), u.max(v))
    }

    /// The arc with id `id` as `(from, to)`, optionally with the pairs in
    /// `reversed` flipped.
    pub fn arc(&self, id: u32, reversed: ElemSet) -> (u32, u32) {
        let (a, b) = pair_of(self.n, id);
        let fwd = self.forward[id as usize - 1] != reversed.contains(id);
        if fwd {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Arcs in canonical order as `(from, to)` pairs.
    pub fn arcs(&self) -> Vec<(u32, u32)> {
        (1..=self.arc_count()).map(|id| self.arc(id, ElemSet::EMPTY)).collect()
    }

    /// The digraph left after deleting the arcs in `x` is acyclic.
    pub fn acyclic_after_deleting(&self, x: ElemSet) -> bool {
        let n = self.n as usize;
        let mut indeg = vec![0u32; n + 1];
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for id in 1..=self.arc_count() {
            if !x.contains(id) {
                let (f, t) = self.arc(id, ElemSet::EMPTY);
                indeg[t as usize] += 1;
                out[f as usize].push(t);
            }
        }
        let mut queue: Vec<u32> = (1..=self.n).filter(|&v| indeg[v as usize] == 0).collect();
        let mut seen = 0u32;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &t in &out[v as usize] {
                indeg[t as usize] -= 1;
                if indeg[t as usize] == 0 {
                    queue.push(t);
                }
            }
        }
        seen == self.n
    }

    /// The tournament with the arcs in `x` reversed is acyclic.  A
    /// tournament is acyclic exactly when its out-degrees are pairwise
    /// distinct.
    pub fn acyclic_after_reversing(&self, x: ElemSet) -> bool {
        let mut outdeg = vec![0u32; self.n as usize + 1];
        for id in 1..=self.arc_count() {
            let (f, _) = self.arc(id, x);
            outdeg[f as usize] += 1;
        }
        let mut seen = vec![false; self.n as usize];
        for v in 1..=self.n {
            let d = outdeg[v as usize] as usize;
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
        true
    }

    /// First directed triangle (by lexicographic vertex triple) of the
    /// tournament with `reversed` flipped, as the three arc ids in ascending
    /// order.
    pub fn first_triangle(&self, reversed: ElemSet) -> Option<[u32; 3]> {
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                for c in b + 1..=self.n {
                    let ab = self.arc_id(a, b);
                    let bc = self.arc_id(b, c);
                    let ac = self.arc_id(a, c);
                    let fab = self.arc(ab, reversed).0 == a;
                    let fbc = self.arc(bc, reversed).0 == b;
                    let fac = self.arc(ac, reversed).0 == a;
                    // Cyclic iff a->b->c->a or a->c->b->a.
                    if (fab && fbc && !fac) || (!fab && !fbc && fac) {
                        return Some([ab, ac, bc]);
                    }
                }
            }
        }
        None
    }
}

fn pair_index(n: u32, a: u32, b: u32) -> u32 {
    debug_assert!(a < b && b <= n);
    (a - 1) * n - a * (a - 1) / 2 + (b - a)
}

fn pair_of(n: u32, id: u32) -> (u32, u32) {
    let mut rest = id;
    for a in 1..n {
        let cnt = n - a;
        if rest <= cnt {
            return (a, a + rest);
        }
        rest -= cnt;
    }
    unreachable!("arc id {id} out of range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_numbering_roundtrip() {
        let n = 6;
        let mut id = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                id += 1;
                assert_eq!(pair_index(n, a, b), id);
                assert_eq!(pair_of(n, id), (a, b));
            }
        }
    }

    #[test]
    fn requires_complete_orientation() {
        assert!(Tournament::new(3, vec![(1, 2), (2, 3)]).is_err());
        assert!(Tournament::new(3, vec![(1, 2), (2, 3), (3, 1), (1, 3)]).is_err());
        let t = Tournament::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(t.arc_count(), 3);
    }

    #[test]
    fn cycle_checks() {
        // 3-cycle 1->2->3->1.
        let t = Tournament::new(3, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!t.acyclic_after_deleting(ElemSet::EMPTY));
        assert!(!t.acyclic_after_reversing(ElemSet::EMPTY));
        assert!(t.first_triangle(ElemSet::EMPTY).is_some());
        // Deleting or reversing any one arc makes it acyclic.
        for id in 1..=3 {
            assert!(t.acyclic_after_deleting(ElemSet::singleton(id)));
            assert!(t.acyclic_after_reversing(ElemSet::singleton(id)));
        }
        // Transitive tournament 1->2->3.
        let tr = Tournament::new(3, vec![(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(tr.acyclic_after_deleting(ElemSet::EMPTY));
        assert!(tr.acyclic_after_reversing(ElemSet::EMPTY));
        assert_eq!(tr.first_triangle(ElemSet::EMPTY), None);
        // Reversing 1->2 in the transitive tournament creates 2->1, 1->3,
        // 2->3: still acyclic (2, 1, 3).
        assert!(tr.acyclic_after_reversing(ElemSet::singleton(1)));
    }
}
