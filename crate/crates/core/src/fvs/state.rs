//! Working state of the feedback-vertex-set reduction: a mutable multigraph
//! with role bookkeeping.
//!
//! Vertices keep their original ids for the whole reduction; removed
//! vertices leave [`KernelState::alive`] and lose their edges.  The sets `A`
//! (endpoint vertices still alive) and `B` (vertices with a double edge into
//! `A`) are derived views recomputed on demand, so they are always
//! consistent with the current graph.
//!
//! A *double edge* between `u` and `v` is two parallel edges, an edge plus a
//! `u`–`v` path whose internal vertices all have degree two, or two such
//! internally disjoint paths.  Degree-two chains leaving `u` through
//! distinct edges cannot share internal vertices, so counting direct
//! instances plus chain hits is exact.

use crate::error::Error;
use crate::graph::MultiGraph;
use crate::instance::{ProblemKind, ReconfigurationInstance};
use crate::set::ElemSet;
use crate::Result;

use super::{LedgerEntry, RemovalCategory, RemovalLedger};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Role {
    Common,
    SourceOnly,
    TargetOnly,
    Outside,
}

/// A connected component of the vertices outside `A ∪ B`, together with the
/// `A ∪ B` vertices adjacent to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece {
    pub vertices: ElemSet,
    pub border: ElemSet,
}

/// All pieces of the current graph, ordered by smallest contained vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PieceDecomposition {
    pub pieces: Vec<Piece>,
}

#[derive(Clone, Debug)]
pub struct KernelState {
    n: u32,
    edges: Vec<(u32, u32)>,
    alive: ElemSet,
    s: ElemSet,
    t: ElemSet,
    k: u32,
    l: i64,
    epsilon: u32,
    ledger: RemovalLedger,
}

impl KernelState {
    pub fn from_instance(inst: &ReconfigurationInstance) -> Result<Self> {
        if inst.kind() != ProblemKind::FeedbackVertexSet {
            return Err(Error::UnsupportedKind(inst.kind().token()));
        }
        let g = inst.structure().graph().expect("feedback vertex set instances carry a graph");
        Ok(KernelState {
            n: g.n(),
            edges: g.edges().to_vec(),
            alive: ElemSet::full(g.n()),
            s: inst.source(),
            t: inst.target(),
            k: inst.k(),
            l: i64::from(inst.l()),
            epsilon: 0,
            ledger: RemovalLedger { entries: Vec::new() },
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alive(&self) -> ElemSet {
        self.alive
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn epsilon(&self) -> u32 {
        self.epsilon
    }

    pub fn ledger(&self) -> &RemovalLedger {
        &self.ledger
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// The surviving edges as a graph over the original vertex ids; removed
    /// vertices are isolated.
    pub fn reduced_graph(&self) -> MultiGraph {
        MultiGraph::new_multi(self.n, self.edges.clone())
            .expect("surviving edges stay within the original universe")
    }

    pub(crate) fn role(&self, v: u32) -> Role {
        match (self.s.contains(v), self.t.contains(v)) {
            (true, true) => Role::Common,
            (true, false) => Role::SourceOnly,
            (false, true) => Role::TargetOnly,
            (false, false) => Role::Outside,
        }
    }

    /// Endpoint vertices still alive: `(S ∪ T) ∩ alive`.
    pub fn a_set(&self) -> ElemSet {
        self.s.union(self.t).intersection(self.alive)
    }

    /// Alive non-`A` vertices with a double edge to some `A` vertex.
    pub fn b_set(&self) -> ElemSet {
        let a = self.a_set();
        let mut b = ElemSet::EMPTY;
        for v in self.alive.difference(a).iter() {
            if a.iter().any(|w| self.has_double_edge(v, w)) {
                b.insert(v);
            }
        }
        b
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

    pub fn loop_count(&self, v: u32) -> u32 {
        self.edges.iter().filter(|&&e| e == (v, v)).count() as u32
    }

    /// Parallel instances between two distinct vertices, or loops at `u`.
    pub fn instances_between(&self, u: u32, v: u32) -> u32 {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count() as u32
    }

    pub fn parallel_pair(&self, u: u32, v: u32) -> bool {
        u != v && self.instances_between(u, v) >= 2
    }

    /// Other endpoints of the edges at `v`, one entry per instance; a loop
    /// contributes `v` twice.
    pub(crate) fn incident_others(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            }
            if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn has_double_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.connection_count(u, v) >= 2
    }

    /// Direct instances plus degree-two chains from `u` to `v`.  Chains
    /// through distinct first edges are internally disjoint, so this counts
    /// independent connections exactly.
    fn connection_count(&self, u: u32, v: u32) -> u32 {
        let mut count = self.instances_between(u, v);
        for z in self.incident_others(u) {
            if z == u || z == v || self.degree(z) != 2 {
                continue;
            }
            let (mut prev, mut cur) = (u, z);
            for _ in 0..=self.n {
                let nxt = self.chain_next(prev, cur);
                if nxt == v {
                    count += 1;
                    break;
                }
                if nxt == u || nxt == prev || self.degree(nxt) != 2 {
                    break;
                }
                prev = cur;
                cur = nxt;
            }
        }
        count
    }

    /// The endpoint a degree-two vertex leads to when entered from `prev`.
    fn chain_next(&self, prev: u32, cur: u32) -> u32 {
        debug_assert_eq!(self.degree(cur), 2);
        let others = self.incident_others(cur);
        debug_assert_eq!(others.len(), 2);
        if others[0] == prev {
            others[1]
        } else {
            others[0]
        }
    }

    pub fn pieces(&self) -> PieceDecomposition {
        let blocked = self.a_set().union(self.b_set());
        let free = self.alive.difference(blocked);
        let mut seen = ElemSet::EMPTY;
        let mut pieces = Vec::new();
        for start in free.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut vertices = ElemSet::singleton(start);
            let mut border = ElemSet::EMPTY;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.incident_others(x) {
                    if free.contains(y) {
                        if !vertices.contains(y) {
                            vertices.insert(y);
                            stack.push(y);
                        }
                    } else {
                        border.insert(y);
                    }
                }
            }
            seen = seen.union(vertices);
            pieces.push(Piece { vertices, border });
        }
        PieceDecomposition { pieces }
    }

    fn record(&mut self, vertex: u32, category: RemovalCategory, rule: u8) {
        self.ledger.entries.push(LedgerEntry { vertex, category, rule });
    }

    fn erase_vertex(&mut self, v: u32) {
        debug_assert!(self.alive.contains(v));
        self.alive.remove(v);
        self.edges.retain(|&(a, b)| a != v && b != v);
    }

    /// Removal whose ledger entry depends on the vertex role; used by the
    /// degree rules.
    pub(crate) fn remove_accounted(&mut self, v: u32, rule: u8) {
        let category = match self.role(v) {
            Role::Common => {
                self.epsilon += 1;
                RemovalCategory::CapacityFreed
            }
            Role::SourceOnly => {
                self.l -= 1;
                RemovalCategory::SourceRemoved
            }
            Role::TargetOnly => {
                self.l -= 1;
                RemovalCategory::TargetRemoved
            }
            Role::Outside => RemovalCategory::OutsideRemoved,
        };
        self.record(v, category, rule);
        self.erase_vertex(v);
    }

    pub(crate) fn remove_outsider(&mut self, v: u32, rule: u8) {
        assert_eq!(self.role(v), Role::Outside, "rule {rule} removes outside vertices only");
        self.record(v, RemovalCategory::OutsideRemoved, rule);
        self.erase_vertex(v);
    }

    /// Removal of a vertex every surviving walk keeps in place; only common
    /// vertices can be forced, and each one frees a capacity slot.
    pub(crate) fn remove_forced(&mut self, v: u32, rule: u8) {
        assert_eq!(self.role(v), Role::Common, "rule {rule} forces a vertex outside S ∩ T");
        assert!(self.k >= 1, "a forced vertex needs a capacity slot");
        self.k -= 1;
        self.record(v, RemovalCategory::Forced, rule);
        self.erase_vertex(v);
    }

    pub(crate) fn remove_piece_vertex(&mut self, v: u32, rule: u8) {
        assert_eq!(self.role(v), Role::Outside, "pieces contain outside vertices only");
        self.record(v, RemovalCategory::PieceRemoved, rule);
        self.erase_vertex(v);
    }

    pub(crate) fn add_edge(&mut self, u: u32, v: u32) {
        debug_assert!(self.alive.contains(u) && self.alive.contains(v));
        self.edges.push((u.min(v), u.max(v)));
        self.edges.sort_unstable();
    }

    pub(crate) fn remove_one_edge(&mut self, u: u32, v: u32) {
        let key = (u.min(v), u.max(v));
        let pos = self.edges.iter().position(|&e| e == key).expect("edge instance present");
        self.edges.remove(pos);
    }
}

#[cfg(test)]
pub(crate) fn test_state(
    n: u32,
    edges: &[(u32, u32)],
    s: &[u32],
    t: &[u32],
    k: u32,
    l: u32,
) -> KernelState {
    use crate::instance::{ProblemKind, ReconfigurationInstance, Structure};
    let g = MultiGraph::new_multi(n, edges.to_vec()).unwrap();
    let inst = ReconfigurationInstance::new(
        ProblemKind::FeedbackVertexSet,
        Structure::Graph(g),
        ElemSet::from_elems(s.iter().copied()),
        ElemSet::from_elems(t.iter().copied()),
        k,
        l,
    )
    .unwrap();
    KernelState::from_instance(&inst).unwrap()
}
