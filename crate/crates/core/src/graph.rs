//! Undirected multigraphs on vertices `1..=n`.
//!
//! Edges are stored as normalized pairs `(u, v)` with `u <= v`; repeated
//! pairs are parallel edges and `(v, v)` is a self-loop.  The edge list is
//! kept sorted so that equal graphs compare equal and serialization is
//! canonical.  Simple-graph contexts construct through [`MultiGraph::new_simple`],
//! which rejects loops and parallel edges.

use crate::error::Error;
use crate::set::{ElemSet, MAX_UNIVERSE};
use crate::Result;

#[derive(Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: u32,
    edges: Vec<(u32, u32)>,
    adj: Vec<u128>,
    loops: u128,
}

impl MultiGraph {
    pub fn new_multi(n: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            for id in [u, v] {
                if id < 1 || id > n {
                    return Err(Error::OutOfRange { id, max: n });
                }
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let mut adj = vec![0u128; n as usize + 1];
        let mut loops = 0u128;
        for &(u, v) in &norm {
            if u == v {
                loops |= 1 << (u - 1);
            } else {
                adj[u as usize] |= 1 << (v - 1);
                adj[v as usize] |= 1 << (u - 1);
            }
        }
        Ok(MultiGraph { n, edges: norm, adj, loops })
    }

    pub fn new_simple(n: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        let g = Self::new_multi(n, edges)?;
        if !g.is_simple() {
            return Err(Error::NotSimple);
        }
        Ok(g)
    }

    pub fn is_simple(&self) -> bool {
        self.loops == 0 && self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Neighbors of `v` as a mask (self-loops excluded).
    pub fn adj_mask(&self, v: u32) -> u128 {
        self.adj[v as usize]
    }

    /// Closed neighborhood `N[v]` as a set (self-loops irrelevant).
    pub fn closed_neighborhood(&self, v: u32) -> ElemSet {
        ElemSet::from_mask(self.adj[v as usize] | 1 << (v - 1))
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        if u == v {
            self.loops >> (u - 1) & 1 == 1
        } else {
            self.adj[u as usize] >> (v - 1) & 1 == 1
        }
    }

    pub fn degree(&self, v: u32) -> u32 {
        let mut d = 0;
        for &(a, b) in &self.edges {
            if a == v {
                d += 1;
            }
            if b == v {
                d += 1;
            }
        }
        d
    }

    /// No edge has both endpoints in `x`.
    pub fn edgeless_within(&self, x: ElemSet) -> bool {
        if self.loops & x.mask() != 0 {
            return false;
        }
        x.iter().all(|v| self.adj[v as usize] & x.mask() == 0)
    }

    /// The sub-multigraph induced by `x` contains no cycle.  A self-loop and
    /// a parallel pair each count as a cycle.
    pub fn acyclic_within(&self, x: ElemSet) -> bool {
        if self.loops & x.mask() != 0 {
            return false;
        }
        let mut parent: Vec<u32> = (0..=self.n).collect();
        fn find(parent: &mut [u32], mut v: u32) -> u32 {
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        for &(u, v) in &self.edges {
            if u != v && x.contains(u) && x.contains(v) {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return false;
                }
                parent[ru as usize] = rv;
            }
        }
        true
    }

    /// The subgraph induced by `x` is two-colorable.  Self-loops inside `x`
    /// are odd cycles.
    pub fn bipartite_within(&self, x: ElemSet) -> bool {
        if self.loops & x.mask() != 0 {
            return false;
        }
        let mut color = vec![u8::MAX; self.n as usize + 1];
        for start in x.iter() {
            if color[start as usize] != u8::MAX {
                continue;
            }
            color[start as usize] = 0;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                let c = color[v as usize];
                for w in ElemSet::from_mask(self.adj[v as usize] & x.mask()).iter() {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - c;
                        queue.push(w);
                    } else if color[w as usize] == c {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every pair of vertices in `x` is adjacent.
    pub fn clique_within(&self, x: ElemSet) -> bool {
        x.iter().all(|v| x.without(v).mask() & !self.adj[v as usize] == 0)
    }

    /// The subgraph induced by `x` is a disjoint union of cliques (no
    /// induced path on three vertices).
    pub fn cluster_within(&self, x: ElemSet) -> bool {
        for v in x.iter() {
            let nb = ElemSet::from_mask(self.adj[v as usize] & x.mask());
            if !self.clique_within(nb) {
                return false;
            }
        }
        true
    }

    /// Every vertex of the graph lies in `x` or has a neighbor in `x`.
    pub fn dominates(&self, x: ElemSet) -> bool {
        let mut covered = x.mask();
        for v in x.iter() {
            covered |= self.adj[v as usize];
        }
        covered & ElemSet::full(self.n).mask() == ElemSet::full(self.n).mask()
    }
}

impl std::fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edges)
    }
}
