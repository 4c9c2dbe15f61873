//! Problem kinds, feasibility, and reconfiguration instances.
//!
//! Every kind fixes an orientation: deletion-style kinds bound solutions
//! from above (`|X| <= k`, e.g. vertex cover), subset-style kinds from below
//! (`|X| >= k`, e.g. independent set).  Feasibility of a set is the kind's
//! predicate plus the size bound of the variant.

use crate::cnf::CnfFormula;
use crate::error::Error;
use crate::family::SetFamily;
use crate::graph::MultiGraph;
use crate::set::ElemSet;
use crate::tournament::Tournament;
use crate::Result;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ProblemKind {
    VertexCover,
    IndependentSet,
    FeedbackVertexSet,
    Forest,
    OddCycleTransversal,
    BipartiteSubgraph,
    Clique,
    ClusterSubgraph,
    DominatingSet,
    HittingSet,
    FeedbackArcSetTournament,
    MinWeightSat,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    Deletion,
    Subset,
}

impl Variant {
    pub fn token(self) -> &'static str {
        match self {
            Variant::Deletion => "deletion",
            Variant::Subset => "subset",
        }
    }

    pub fn size_ok(self, len: u32, k: u32) -> bool {
        match self {
            Variant::Deletion => len <= k,
            Variant::Subset => len >= k,
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deletion" => Ok(Variant::Deletion),
            "subset" => Ok(Variant::Subset),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown variant `{s}`") }),
        }
    }
}

pub const ALL_KINDS: [ProblemKind; 12] = [
    ProblemKind::VertexCover,
    ProblemKind::IndependentSet,
    ProblemKind::FeedbackVertexSet,
    ProblemKind::Forest,
    ProblemKind::OddCycleTransversal,
    ProblemKind::BipartiteSubgraph,
    ProblemKind::Clique,
    ProblemKind::ClusterSubgraph,
    ProblemKind::DominatingSet,
    ProblemKind::HittingSet,
    ProblemKind::FeedbackArcSetTournament,
    ProblemKind::MinWeightSat,
];

impl ProblemKind {
    pub fn token(self) -> &'static str {
        match self {
            ProblemKind::VertexCover => "vertex-cover",
            ProblemKind::IndependentSet => "independent-set",
            ProblemKind::FeedbackVertexSet => "feedback-vertex-set",
            ProblemKind::Forest => "forest",
            ProblemKind::OddCycleTransversal => "odd-cycle-transversal",
            ProblemKind::BipartiteSubgraph => "bipartite-subgraph",
            ProblemKind::Clique => "clique",
            ProblemKind::ClusterSubgraph => "cluster-subgraph",
            ProblemKind::DominatingSet => "dominating-set",
            ProblemKind::HittingSet => "hitting-set",
            ProblemKind::FeedbackArcSetTournament => "feedback-arc-set-tournament",
            ProblemKind::MinWeightSat => "min-weight-sat",
        }
    }

    /// The orientation inherent to the kind.
    pub fn variant(self) -> Variant {
        match self {
            ProblemKind::IndependentSet
            | ProblemKind::Forest
            | ProblemKind::BipartiteSubgraph
            | ProblemKind::Clique
            | ProblemKind::ClusterSubgraph => Variant::Subset,
            _ => Variant::Deletion,
        }
    }

    /// Supersets (within capacity) of feasible sets stay feasible.
    pub fn superset_closed(self) -> bool {
        self.variant() == Variant::Deletion
    }

    /// A bounded-depth branching enumerator for minimal solutions exists.
    pub fn enumerable(self) -> bool {
        matches!(
            self,
            ProblemKind::VertexCover
                | ProblemKind::HittingSet
                | ProblemKind::FeedbackArcSetTournament
                | ProblemKind::MinWeightSat
        )
    }

    /// Only the feedback vertex set pipeline works with (and produces)
    /// parallel edges and self-loops; all other graph kinds require simple
    /// graphs.
    pub fn allows_multigraph(self) -> bool {
        self == ProblemKind::FeedbackVertexSet
    }

    pub fn uses_graph(self) -> bool {
        !matches!(
            self,
            ProblemKind::HittingSet
                | ProblemKind::FeedbackArcSetTournament
                | ProblemKind::MinWeightSat
        )
    }
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for ProblemKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL_KINDS
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown problem kind `{s}`") })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Structure {
    Graph(MultiGraph),
    Family(SetFamily),
    Tournament(Tournament),
    Cnf(CnfFormula),
}

impl Structure {
    /// Size of the element universe: vertices, elements, arcs or variables.
    pub fn universe(&self) -> u32 {
        match self {
            Structure::Graph(g) => g.n(),
            Structure::Family(f) => f.universe(),
            Structure::Tournament(t) => t.arc_count(),
            Structure::Cnf(f) => f.vars(),
        }
    }

    pub fn graph(&self) -> Option<&MultiGraph> {
        match self {
            Structure::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub(crate) fn matches(&self, kind: ProblemKind) -> bool {
        match (kind, self) {
            (ProblemKind::HittingSet, Structure::Family(_)) => true,
            (ProblemKind::FeedbackArcSetTournament, Structure::Tournament(_)) => true,
            (ProblemKind::MinWeightSat, Structure::Cnf(_)) => true,
            (k, Structure::Graph(_)) => k.uses_graph(),
            _ => false,
        }
    }
}

fn predicate(kind: ProblemKind, structure: &Structure, x: ElemSet) -> bool {
    match (kind, structure) {
        (ProblemKind::VertexCover, Structure::Graph(g)) => {
            g.edgeless_within(ElemSet::full(g.n()).difference(x))
        }
        (ProblemKind::IndependentSet, Structure::Graph(g)) => g.edgeless_within(x),
        (ProblemKind::FeedbackVertexSet, Structure::Graph(g)) => {
            g.acyclic_within(ElemSet::full(g.n()).difference(x))
        }
        (ProblemKind::Forest, Structure::Graph(g)) => g.acyclic_within(x),
        (ProblemKind::OddCycleTransversal, Structure::Graph(g)) => {
            g.bipartite_within(ElemSet::full(g.n()).difference(x))
        }
        (ProblemKind::BipartiteSubgraph, Structure::Graph(g)) => g.bipartite_within(x),
        (ProblemKind::Clique, Structure::Graph(g)) => g.clique_within(x),
        (ProblemKind::ClusterSubgraph, Structure::Graph(g)) => g.cluster_within(x),
        (ProblemKind::DominatingSet, Structure::Graph(g)) => g.dominates(x),
        (ProblemKind::HittingSet, Structure::Family(f)) => f.hits_all(x),
        (ProblemKind::FeedbackArcSetTournament, Structure::Tournament(t)) => {
            t.acyclic_after_deleting(x)
        }
        (ProblemKind::MinWeightSat, Structure::Cnf(f)) => f.satisfied_by(x),
        _ => unreachable!("structure mismatch is rejected before the predicate runs"),
    }
}

fn validate_shape(kind: ProblemKind, structure: &Structure, variant: Variant) -> Result<()> {
    if variant != kind.variant() {
        return Err(Error::VariantMismatch { kind: kind.token(), variant: variant.token() });
    }
    if !structure.matches(kind) {
        return Err(Error::StructureMismatch(kind.token()));
    }
    if let Structure::Graph(g) = structure {
        if !kind.allows_multigraph() && !g.is_simple() {
            return Err(Error::NotSimple);
        }
    }
    Ok(())
}

fn validate_elems(structure: &Structure, x: ElemSet) -> Result<()> {
    let max = structure.universe();
    match x.iter().find(|&id| id > max) {
        Some(id) => Err(Error::OutOfRange { id, max }),
        None => Ok(()),
    }
}

/// `x` satisfies the kind's predicate and the variant's size bound.
pub fn check_feasible(
    kind: ProblemKind,
    structure: &Structure,
    x: ElemSet,
    variant: Variant,
    k: u32,
) -> Result<bool> {
    validate_shape(kind, structure, variant)?;
    validate_elems(structure, x)?;
    Ok(variant.size_ok(x.len(), k) && predicate(kind, structure, x))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReconfigurationInstance {
    kind: ProblemKind,
    variant: Variant,
    structure: Structure,
    source: ElemSet,
    target: ElemSet,
    k: u32,
    l: u32,
}

impl ReconfigurationInstance {
    pub fn new(
        kind: ProblemKind,
        structure: Structure,
        source: ElemSet,
        target: ElemSet,
        k: u32,
        l: u32,
    ) -> Result<Self> {
        let variant = kind.variant();
        validate_shape(kind, &structure, variant)?;
        for (which, x) in [("source", source), ("target", target)] {
            validate_elems(&structure, x)?;
            if !variant.size_ok(x.len(), k) {
                return Err(Error::Infeasible {
                    which,
                    reason: format!("size {} violates the {variant} bound k={k}", x.len()),
                });
            }
            if !predicate(kind, &structure, x) {
                return Err(Error::Infeasible {
                    which,
                    reason: format!("{:?} does not satisfy the {kind} predicate", x),
                });
            }
        }
        Ok(ReconfigurationInstance { kind, variant, structure, source, target, k, l })
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn source(&self) -> ElemSet {
        self.source
    }

    pub fn target(&self) -> ElemSet {
        self.target
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn universe(&self) -> u32 {
        self.structure.universe()
    }

    /// Predicate plus size bound; `x` must already be within the universe.
    pub fn feasible(&self, x: ElemSet) -> bool {
        self.variant.size_ok(x.len(), self.k) && predicate(self.kind, &self.structure, x)
    }
}

/// Split of the universe relative to source and target.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InstancePartition {
    /// `S ∩ T`: in both endpoints.
    pub c: ElemSet,
    /// `S \ T`: must be removed at least once.
    pub s_d: ElemSet,
    /// `T \ S`: must be added at least once.
    pub t_a: ElemSet,
    /// Everything else.
    pub o: ElemSet,
}

pub fn partition_instance(inst: &ReconfigurationInstance) -> InstancePartition {
    let s = inst.source();
    let t = inst.target();
    let all = ElemSet::full(inst.universe());
    InstancePartition {
        c: s.intersection(t),
        s_d: s.difference(t),
        t_a: t.difference(s),
        o: all.difference(s.union(t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[u32]) -> ElemSet {
        ElemSet::from_elems(elems.iter().copied())
    }

    fn path3() -> Structure {
        Structure::Graph(MultiGraph::new_simple(3, vec![(1, 2), (2, 3)]).unwrap())
    }

    #[test]
    fn feasibility_includes_size_bound() {
        // {2} covers the path; {1, 3} covers it too; {1} does not.
        let s = path3();
        let vc = ProblemKind::VertexCover;
        assert!(check_feasible(vc, &s, set(&[2]), Variant::Deletion, 1).unwrap());
        assert!(check_feasible(vc, &s, set(&[1, 3]), Variant::Deletion, 2).unwrap());
        assert!(!check_feasible(vc, &s, set(&[1, 3]), Variant::Deletion, 1).unwrap());
        assert!(!check_feasible(vc, &s, set(&[1]), Variant::Deletion, 1).unwrap());
        // Subset orientation: |X| >= k.
        let is = ProblemKind::IndependentSet;
        assert!(check_feasible(is, &s, set(&[1, 3]), Variant::Subset, 2).unwrap());
        assert!(!check_feasible(is, &s, set(&[1]), Variant::Subset, 2).unwrap());
    }

    #[test]
    fn orientation_and_structure_mismatches_error() {
        let s = path3();
        assert!(matches!(
            check_feasible(ProblemKind::VertexCover, &s, set(&[2]), Variant::Subset, 1),
            Err(Error::VariantMismatch { .. })
        ));
        assert!(matches!(
            check_feasible(ProblemKind::HittingSet, &s, set(&[2]), Variant::Deletion, 1),
            Err(Error::StructureMismatch(_))
        ));
        assert!(matches!(
            check_feasible(ProblemKind::VertexCover, &s, set(&[7]), Variant::Deletion, 9),
            Err(Error::OutOfRange { id: 7, max: 3 })
        ));
    }

    #[test]
    fn multigraph_only_for_feedback_vertex_set() {
        let multi = Structure::Graph(MultiGraph::new_multi(2, vec![(1, 2), (1, 2)]).unwrap());
        assert!(matches!(
            check_feasible(ProblemKind::VertexCover, &multi, set(&[1]), Variant::Deletion, 1),
            Err(Error::NotSimple)
        ));
        // The parallel pair is a cycle: {1} is a feasible FVS, {} is not.
        assert!(check_feasible(
            ProblemKind::FeedbackVertexSet,
            &multi,
            set(&[1]),
            Variant::Deletion,
            1
        )
        .unwrap());
        assert!(!check_feasible(
            ProblemKind::FeedbackVertexSet,
            &multi,
            set(&[]),
            Variant::Deletion,
            1
        )
        .unwrap());
    }

    #[test]
    fn instance_validates_endpoints() {
        let bad = ReconfigurationInstance::new(
            ProblemKind::VertexCover,
            path3(),
            set(&[1]),
            set(&[2]),
            1,
            2,
        );
        assert!(matches!(bad, Err(Error::Infeasible { which: "source", .. })));
        let ok = ReconfigurationInstance::new(
            ProblemKind::VertexCover,
            path3(),
            set(&[2]),
            set(&[1, 3]),
            2,
            3,
        )
        .unwrap();
        assert_eq!(ok.universe(), 3);
    }

    #[test]
    fn partition_covers_universe() {
        let inst = ReconfigurationInstance::new(
            ProblemKind::VertexCover,
            path3(),
            set(&[2]),
            set(&[1, 3]),
            2,
            4,
        )
        .unwrap();
        let p = partition_instance(&inst);
        assert_eq!(p.c, set(&[]));
        assert_eq!(p.s_d, set(&[2]));
        assert_eq!(p.t_a, set(&[1, 3]));
        assert_eq!(p.o, set(&[]));
        let union = p.c.union(p.s_d).union(p.t_a).union(p.o);
        assert_eq!(union, ElemSet::full(3));
    }

    #[test]
    fn kind_tokens_roundtrip() {
        for kind in ALL_KINDS {
            assert_eq!(kind.token().parse::<ProblemKind>().unwrap(), kind);
        }
        assert!("no-such-kind".parse::<ProblemKind>().is_err());
    }
}
