//! Generators for structured reconfiguration instances whose answers are
//! pinned by a source problem on a smaller graph: a terminal grid of
//! critical-graph copies (reachable iff the source has k vertices inducing
//! the property), a four-block clique overlap (reachable iff the source has
//! a t-clique), and a clique tower over a dominated mirror (reachable iff
//! the source has a t-vertex dominating set).

use crate::error::Error;
use crate::family::SetFamily;
use crate::graph::MultiGraph;
use crate::instance::{ProblemKind, ReconfigurationInstance, Structure};
use crate::oracle::bfs_reconfigure;
use crate::set::ElemSet;
use crate::Result;

/// Hereditary properties the generators know how to target.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HereditaryProperty {
    Edgeless,
    Forest,
    Bipartite,
}

impl HereditaryProperty {
    pub fn token(self) -> &'static str {
        match self {
            HereditaryProperty::Edgeless => "edgeless",
            HereditaryProperty::Forest => "forest",
            HereditaryProperty::Bipartite => "bipartite",
        }
    }

    /// Does the subgraph induced on `within` satisfy the property?
    pub fn holds(self, g: &MultiGraph, within: ElemSet) -> bool {
        match self {
            HereditaryProperty::Edgeless => g.edgeless_within(within),
            HereditaryProperty::Forest => g.acyclic_within(within),
            HereditaryProperty::Bipartite => g.bipartite_within(within),
        }
    }

    /// The deletion-style kind whose feasible sets are exactly the
    /// complements of property-inducing sets.
    pub fn deletion_kind(self) -> ProblemKind {
        match self {
            HereditaryProperty::Edgeless => ProblemKind::VertexCover,
            HereditaryProperty::Forest => ProblemKind::FeedbackVertexSet,
            HereditaryProperty::Bipartite => ProblemKind::OddCycleTransversal,
        }
    }
}

/// A graph outside the property whose every one-vertex deletion falls back
/// into it, with two distinguished terminals.
#[derive(Clone, Debug)]
pub struct CriticalGraph {
    graph: MultiGraph,
    terminals: (u32, u32),
    property: HereditaryProperty,
}

impl CriticalGraph {
    pub fn new(
        graph: MultiGraph,
        terminals: (u32, u32),
        property: HereditaryProperty,
    ) -> Result<Self> {
        let n = graph.n();
        if n < 2 {
            return Err(Error::NotCritical("fewer than two vertices".into()));
        }
        if !graph.is_simple() {
            return Err(Error::NotCritical("parallel edges or self-loops".into()));
        }
        let (a, b) = terminals;
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::NotCritical(format!("bad terminal pair ({a}, {b})")));
        }
        let full = ElemSet::full(n);
        if property.holds(&graph, full) {
            return Err(Error::NotCritical(format!("already {}", property.token())));
        }
        for v in 1..=n {
            if !property.holds(&graph, full.without(v)) {
                return Err(Error::NotCritical(format!(
                    "deleting vertex {v} does not yield a {} graph",
                    property.token()
                )));
            }
        }
        Ok(CriticalGraph { graph, terminals, property })
    }

    /// The only edgeless-critical graph: a single edge.
    pub fn single_edge() -> Self {
        let g = MultiGraph::new_simple(2, vec![(1, 2)]).unwrap();
        CriticalGraph::new(g, (1, 2), HereditaryProperty::Edgeless).unwrap()
    }

    /// A triangle; critical for forests and for bipartite graphs.
    pub fn triangle(property: HereditaryProperty) -> Result<Self> {
        let g = MultiGraph::new_simple(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        CriticalGraph::new(g, (1, 2), property)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn terminals(&self) -> (u32, u32) {
        self.terminals
    }

    pub fn property(&self) -> HereditaryProperty {
        self.property
    }

    pub fn order(&self) -> u32 {
        self.graph.n()
    }
}

/// Glues `c` copies of `h` at the first terminal of each copy.
///
/// The gluing vertex gets id 1; copy `i` occupies the next |V|−1 ids in
/// source order, so the layout is reproducible.
pub fn build_star(h: &CriticalGraph, c: u32) -> MultiGraph {
    assert!(c >= 1);
    let glued = h.terminals.0;
    let per_copy = h.order() - 1;
    let rank = |v: u32| if v < glued { v } else { v - 1 };
    let mut edges = Vec::new();
    for i in 0..c {
        let offset = 1 + i * per_copy;
        let map = |v: u32| if v == glued { 1 } else { offset + rank(v) };
        for &(x, y) in h.graph.edges() {
            edges.push((map(x), map(y)));
        }
    }
    MultiGraph::new_simple(c * per_copy + 1, edges).unwrap()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reduction {
    MinMax,
    CliqueCluster,
    DomSet,
}

/// A generated instance together with the source question that predicts
/// its answer.
#[derive(Clone, Debug)]
pub struct GadgetRecipe {
    pub reduction: Reduction,
    pub source: MultiGraph,
    pub parameter: u32,
    pub emitted: ReconfigurationInstance,
    /// The source question whose answer equals reachability of `emitted`.
    pub predicted_equivalence: String,
}

/// Disjoint union of `g` and a grid of k² critical-graph copies joining k
/// left gluing vertices to k right ones.  The emitted deletion instance
/// walks the left gluing set to the right one and is reachable within
/// budget 4k iff `g` has k vertices inducing the property.
pub fn gen_minmax_gadget(g: &MultiGraph, k: u32, h: &CriticalGraph) -> Result<GadgetRecipe> {
    assert!(k >= 1);
    assert!(g.is_simple());
    let ng = g.n();
    let hn = h.order();
    let internals = hn - 2;
    let a_base = ng;
    let b_base = ng + k;
    let grid_base = ng + 2 * k;
    let (t_left, t_right) = h.terminals;
    let internal_rank = |v: u32| {
        let mut r = 0;
        for u in 1..=hn {
            if u == t_left || u == t_right {
                continue;
            }
            r += 1;
            if u == v {
                return r;
            }
        }
        unreachable!("terminal passed where an internal vertex was expected")
    };

    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    for i in 1..=k {
        for j in 1..=k {
            let base = grid_base + ((i - 1) * k + (j - 1)) * internals;
            let map = |v: u32| {
                if v == t_left {
                    a_base + i
                } else if v == t_right {
                    b_base + j
                } else {
                    base + internal_rank(v)
                }
            };
            for &(x, y) in h.graph.edges() {
                edges.push((map(x), map(y)));
            }
        }
    }
    let graph = MultiGraph::new_simple(grid_base + k * k * internals, edges)?;
    let g_verts = ElemSet::full(ng);
    let left = ElemSet::from_elems((1..=k).map(|i| a_base + i));
    let right = ElemSet::from_elems((1..=k).map(|j| b_base + j));
    let emitted = ReconfigurationInstance::new(
        h.property.deletion_kind(),
        Structure::Graph(graph),
        g_verts.union(left),
        g_verts.union(right),
        ng + k,
        4 * k,
    )?;
    Ok(GadgetRecipe {
        reduction: Reduction::MinMax,
        source: g.clone(),
        parameter: k,
        emitted,
        predicted_equivalence: format!("{}-subset(k={k})", h.property.token()),
    })
}

/// Mirror of `g` joined completely to four t-cliques A, B, C, D, with
/// A∪B, A∪C, B∪D and C∪D forming 2t-cliques.  The walk from A∪B to C∪D
/// within budget 6t must route 2t of capacity through a t-clique of the
/// mirror, so reachability equals `g` having a t-clique.
pub fn gen_clique_cluster_gadget(g: &MultiGraph, t: u32) -> Result<GadgetRecipe> {
    assert!(t >= 1);
    assert!(g.is_simple());
    let ng = g.n();
    let block = |idx: u32, v: u32| ng + idx * t + v;
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    for idx in 0..4 {
        for v in 1..=t {
            for w in (v + 1)..=t {
                edges.push((block(idx, v), block(idx, w)));
            }
        }
    }
    for x in 1..=ng {
        for idx in 0..4 {
            for v in 1..=t {
                edges.push((x, block(idx, v)));
            }
        }
    }
    for (p, q) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
        for v in 1..=t {
            for w in 1..=t {
                edges.push((block(p, v), block(q, w)));
            }
        }
    }
    let graph = MultiGraph::new_simple(ng + 4 * t, edges)?;
    let source_side = ElemSet::from_elems((1..=2 * t).map(|v| ng + v));
    let target_side = ElemSet::from_elems((1..=2 * t).map(|v| ng + 2 * t + v));
    let emitted = ReconfigurationInstance::new(
        ProblemKind::ClusterSubgraph,
        Structure::Graph(graph),
        source_side,
        target_side,
        2 * t,
        6 * t,
    )?;
    Ok(GadgetRecipe {
        reduction: Reduction::CliqueCluster,
        source: g.clone(),
        parameter: t,
        emitted,
        predicted_equivalence: format!("t-clique(t={t})"),
    })
}

/// An outer (t+1)-clique paired into t+1 inner (t+1)-cliques, plus t+1
/// copies of `g` with universal vertices, wired from the first copy.
/// Moving the outer clique to inner picks needs t+1 spare capacity, which
/// frees up only by dominating the first copy with t vertices, so
/// reachability equals `g` having a t-vertex dominating set.
pub fn gen_domset_gadget(g: &MultiGraph, t: u32) -> Result<GadgetRecipe> {
    assert!(t >= 1);
    assert!(g.is_simple());
    let ng = g.n();
    let width = t + 1;
    let outer = |j: u32| j + 1;
    let inner = |i: u32, j: u32| i * width + j + 1;
    let tower = (t + 2) * width;
    let copy = |i: u32, v: u32| tower + i * (ng + 1) + v;
    let universal = |i: u32| tower + i * (ng + 1) + ng + 1;

    let mut edges = Vec::new();
    for j in 0..=t {
        for jj in (j + 1)..=t {
            edges.push((outer(j), outer(jj)));
        }
    }
    for i in 1..=width {
        for j in 0..=t {
            for jj in (j + 1)..=t {
                edges.push((inner(i, j), inner(i, jj)));
            }
            edges.push((outer(j), inner(i, j)));
        }
    }
    for i in 0..=t {
        for &(x, y) in g.edges() {
            edges.push((copy(i, x), copy(i, y)));
        }
        for v in 1..=ng {
            edges.push((copy(i, v), universal(i)));
        }
    }
    for j in 1..=ng {
        for i in 1..=t {
            edges.push((copy(0, j), universal(i)));
            edges.push((copy(0, j), copy(i, j)));
        }
    }
    for &(x, y) in g.edges() {
        for i in 1..=t {
            edges.push((copy(0, x), copy(i, y)));
            edges.push((copy(0, y), copy(i, x)));
        }
    }
    let graph = MultiGraph::new_simple(tower + width * (ng + 1), edges)?;
    let universals = ElemSet::from_elems((0..=t).map(universal));
    let source = universals.union(ElemSet::from_elems((0..=t).map(outer)));
    let picks = ElemSet::from_elems((1..=width).map(|i| inner(i, i - 1)));
    let emitted = ReconfigurationInstance::new(
        ProblemKind::DominatingSet,
        Structure::Graph(graph),
        source,
        universals.union(picks),
        3 * t + 2,
        6 * t + 4,
    )?;
    Ok(GadgetRecipe {
        reduction: Reduction::DomSet,
        source: g.clone(),
        parameter: t,
        emitted,
        predicted_equivalence: format!("t-dominating-set(t={t})"),
    })
}

/// Does the oracle's answer on the emitted instance match `source_answer`?
pub fn verify_reduction_equivalence(recipe: &GadgetRecipe, source_answer: bool) -> Result<bool> {
    Ok(bfs_reconfigure(&recipe.emitted)?.reachable == source_answer)
}

/// Rephrases a dominating-set instance as hitting the family of closed
/// neighborhoods; the feasible sets are identical.
pub fn domset_to_hitting_set(inst: &ReconfigurationInstance) -> Result<ReconfigurationInstance> {
    if inst.kind() != ProblemKind::DominatingSet {
        return Err(Error::UnsupportedKind(inst.kind().token()));
    }
    let g = inst.structure().graph().expect("dominating-set instances hold graphs");
    let sets: Vec<ElemSet> = (1..=g.n()).map(|v| g.closed_neighborhood(v)).collect();
    let family = SetFamily::from_sets(g.n(), sets)?;
    ReconfigurationInstance::new(
        ProblemKind::HittingSet,
        Structure::Family(family),
        inst.source(),
        inst.target(),
        inst.k(),
        inst.l(),
    )
}

fn exists_subset(n: u32, size: u32, mut test: impl FnMut(ElemSet) -> bool) -> bool {
    fn go(
        n: u32,
        size: u32,
        start: u32,
        acc: ElemSet,
        test: &mut dyn FnMut(ElemSet) -> bool,
    ) -> bool {
        if acc.len() == size {
            return test(acc);
        }
        let need = size - acc.len();
        let mut v = start;
        while v + need - 1 <= n {
            let mut next = acc;
            next.insert(v);
            if go(n, size, v + 1, next, test) {
                return true;
            }
            v += 1;
        }
        false
    }
    if size > n {
        return false;
    }
    go(n, size, 1, ElemSet::EMPTY, &mut test)
}

/// Exhaustive check for `k` vertices of `g` inducing the property.
pub fn has_property_subset(g: &MultiGraph, property: HereditaryProperty, k: u32) -> bool {
    exists_subset(g.n(), k, |x| property.holds(g, x))
}

/// Exhaustive t-clique check.
pub fn has_clique(g: &MultiGraph, t: u32) -> bool {
    exists_subset(g.n(), t, |x| g.clique_within(x))
}

/// Exhaustive t-vertex dominating-set check.
pub fn has_dominating_set(g: &MultiGraph, t: u32) -> bool {
    exists_subset(g.n(), t, |x| g.dominates(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(n: u32, edges: &[(u32, u32)]) -> MultiGraph {
        MultiGraph::new_simple(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn builtin_critical_graphs_verify() {
        CriticalGraph::single_edge();
        CriticalGraph::triangle(HereditaryProperty::Forest).unwrap();
        CriticalGraph::triangle(HereditaryProperty::Bipartite).unwrap();
        // Odd cycles beyond the triangle are bipartite-critical too.
        let c5 = simple(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        CriticalGraph::new(c5, (1, 2), HereditaryProperty::Bipartite).unwrap();
    }

    #[test]
    fn non_critical_graphs_are_rejected() {
        // Deleting an endpoint of a path still leaves an edge.
        let p3 = simple(3, &[(1, 2), (2, 3)]);
        assert!(matches!(
            CriticalGraph::new(p3, (1, 3), HereditaryProperty::Edgeless),
            Err(Error::NotCritical(_))
        ));
        let k3 = simple(3, &[(1, 2), (1, 3), (2, 3)]);
        assert!(matches!(
            CriticalGraph::new(k3, (1, 2), HereditaryProperty::Edgeless),
            Err(Error::NotCritical(_))
        ));
        // A graph inside the property cannot be critical for it.
        let k2 = simple(2, &[(1, 2)]);
        assert!(matches!(
            CriticalGraph::new(k2, (1, 2), HereditaryProperty::Forest),
            Err(Error::NotCritical(_))
        ));
    }

    #[test]
    fn star_shapes() {
        let star = build_star(&CriticalGraph::single_edge(), 4);
        assert_eq!(star.n(), 5);
        assert_eq!(star.edges(), &[(1, 2), (1, 3), (1, 4), (1, 5)]);

        let triangle = CriticalGraph::triangle(HereditaryProperty::Forest).unwrap();
        let friendship = build_star(&triangle, 4);
        assert_eq!(friendship.n(), 9);
        assert_eq!(friendship.m(), 12);
        assert_eq!(friendship.degree(1), 8);

        let same = build_star(&triangle, 1);
        assert_eq!(same.n(), 3);
        assert_eq!(same.m(), 3);
    }

    #[test]
    fn minmax_shapes() {
        let g = simple(3, &[(1, 2), (2, 3)]);
        let grid = gen_minmax_gadget(&g, 2, &CriticalGraph::single_edge()).unwrap();
        let inst = &grid.emitted;
        assert_eq!(inst.kind(), ProblemKind::VertexCover);
        assert_eq!(inst.universe(), 7);
        assert_eq!((inst.k(), inst.l()), (5, 8));
        assert_eq!(inst.source(), ElemSet::from_elems([1, 2, 3, 4, 5]));
        assert_eq!(inst.target(), ElemSet::from_elems([1, 2, 3, 6, 7]));
        // With a single-edge critical graph the grid is complete bipartite.
        let w_edges: Vec<(u32, u32)> = inst
            .structure()
            .graph()
            .unwrap()
            .edges()
            .iter()
            .copied()
            .filter(|&(x, _)| x >= 4)
            .collect();
        assert_eq!(w_edges, vec![(4, 6), (4, 7), (5, 6), (5, 7)]);

        let triangle = CriticalGraph::triangle(HereditaryProperty::Forest).unwrap();
        let tri = gen_minmax_gadget(&g, 2, &triangle).unwrap();
        assert_eq!(tri.emitted.kind(), ProblemKind::FeedbackVertexSet);
        assert_eq!(tri.emitted.universe(), 3 + 4 + 4);
    }

    #[test]
    fn minmax_equivalence_small() {
        // Two isolated vertices form an independent pair; an edge does not.
        let yes = gen_minmax_gadget(&simple(2, &[]), 2, &CriticalGraph::single_edge()).unwrap();
        assert!(has_property_subset(&yes.source, HereditaryProperty::Edgeless, 2));
        assert!(verify_reduction_equivalence(&yes, true).unwrap());

        let no = gen_minmax_gadget(&simple(2, &[(1, 2)]), 2, &CriticalGraph::single_edge())
            .unwrap();
        assert!(!has_property_subset(&no.source, HereditaryProperty::Edgeless, 2));
        assert!(verify_reduction_equivalence(&no, false).unwrap());
    }

    #[test]
    fn minmax_forest_equivalence() {
        // A single vertex always induces a forest.
        let triangle = CriticalGraph::triangle(HereditaryProperty::Forest).unwrap();
        let yes =
            gen_minmax_gadget(&simple(3, &[(1, 2), (1, 3), (2, 3)]), 1, &triangle).unwrap();
        assert!(has_property_subset(&yes.source, HereditaryProperty::Forest, 1));
        assert!(verify_reduction_equivalence(&yes, true).unwrap());
    }

    #[test]
    fn clique_cluster_shapes_and_equivalence() {
        let yes = gen_clique_cluster_gadget(&simple(2, &[(1, 2)]), 2).unwrap();
        let inst = &yes.emitted;
        assert_eq!(inst.universe(), 10);
        assert_eq!((inst.k(), inst.l()), (4, 12));
        assert_eq!(inst.source(), ElemSet::from_elems([3, 4, 5, 6]));
        assert_eq!(inst.target(), ElemSet::from_elems([7, 8, 9, 10]));
        assert!(has_clique(&yes.source, 2));
        assert!(verify_reduction_equivalence(&yes, true).unwrap());

        let no = gen_clique_cluster_gadget(&simple(2, &[]), 2).unwrap();
        assert!(!has_clique(&no.source, 2));
        assert!(verify_reduction_equivalence(&no, false).unwrap());
    }

    #[test]
    fn domset_shapes_and_equivalence() {
        let yes = gen_domset_gadget(&simple(2, &[(1, 2)]), 1).unwrap();
        let inst = &yes.emitted;
        assert_eq!(inst.universe(), 12);
        assert_eq!((inst.k(), inst.l()), (5, 10));
        assert_eq!(inst.source(), ElemSet::from_elems([1, 2, 9, 12]));
        assert_eq!(inst.target(), ElemSet::from_elems([3, 6, 9, 12]));
        assert!(has_dominating_set(&yes.source, 1));
        assert!(verify_reduction_equivalence(&yes, true).unwrap());

        let no = gen_domset_gadget(&simple(2, &[]), 1).unwrap();
        assert!(!has_dominating_set(&no.source, 1));
        assert!(verify_reduction_equivalence(&no, false).unwrap());
    }

    #[test]
    fn domset_converts_to_hitting_set() {
        let recipe = gen_domset_gadget(&simple(2, &[(1, 2)]), 1).unwrap();
        let hs = domset_to_hitting_set(&recipe.emitted).unwrap();
        assert_eq!(hs.kind(), ProblemKind::HittingSet);
        assert_eq!(hs.universe(), recipe.emitted.universe());
        let direct = bfs_reconfigure(&recipe.emitted).unwrap();
        let via_family = bfs_reconfigure(&hs).unwrap();
        assert_eq!(direct.reachable, via_family.reachable);
        assert_eq!(direct.distance, via_family.distance);

        assert!(matches!(
            domset_to_hitting_set(&gen_clique_cluster_gadget(&simple(2, &[]), 1)
                .unwrap()
                .emitted),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn size_formulas_hold() {
        let g = simple(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let triangle = CriticalGraph::triangle(HereditaryProperty::Forest).unwrap();
        for k in 1..=2u32 {
            let r = gen_minmax_gadget(&g, k, &triangle).unwrap();
            assert_eq!(r.emitted.universe(), 4 + 2 * k + k * k);
            assert_eq!(r.emitted.source().len(), 4 + k);
            assert_eq!(r.emitted.target().len(), 4 + k);
            assert_eq!((r.emitted.k(), r.emitted.l()), (4 + k, 4 * k));
        }
        for t in 1..=2u32 {
            let r = gen_clique_cluster_gadget(&g, t).unwrap();
            assert_eq!(r.emitted.universe(), 4 + 4 * t);
            assert_eq!((r.emitted.k(), r.emitted.l()), (2 * t, 6 * t));
            let r = gen_domset_gadget(&g, t).unwrap();
            assert_eq!(r.emitted.universe(), (t + 2) * (t + 1) + (t + 1) * 5);
            assert_eq!(r.emitted.source().len(), 2 * t + 2);
            assert_eq!(r.emitted.target().len(), 2 * t + 2);
            assert_eq!((r.emitted.k(), r.emitted.l()), (3 * t + 2, 6 * t + 4));
        }
    }
}
