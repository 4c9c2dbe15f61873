//! Exact decision and shortest-sequence search by breadth-first exploration
//! of the reconfiguration graph, plus the touch-once fast path.

use std::collections::{HashMap, VecDeque};

use crate::error::Error;
use crate::instance::{partition_instance, ReconfigurationInstance};
use crate::sequence::{ReconfigurationSequence, Step};
use crate::set::ElemSet;
use crate::Result;

/// Node-expansion guard: searches abort with a distinct error instead of
/// reporting a wrong "unreachable" once the limit is hit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBudget {
    pub max_expansions: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_expansions: 10_000_000 }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    pub reachable: bool,
    /// Shortest number of steps, present iff reachable within budget.
    pub distance: Option<u32>,
    /// One shortest sequence, unique via the neighbor ordering.
    pub sequence: Option<ReconfigurationSequence>,
    pub nodes_expanded: usize,
}

impl SearchResult {
    fn unreachable(nodes_expanded: usize) -> Self {
        SearchResult { reachable: false, distance: None, sequence: None, nodes_expanded }
    }
}

/// All feasible sets that differ from `x` by one element, ascending by the
/// touched element id.
pub fn neighbors(inst: &ReconfigurationInstance, x: ElemSet) -> Vec<ElemSet> {
    let full = ElemSet::full(inst.universe());
    frame_neighbors(inst, x, ElemSet::EMPTY, full)
}

fn frame_neighbors(
    inst: &ReconfigurationInstance,
    x: ElemSet,
    floor: ElemSet,
    ceil: ElemSet,
) -> Vec<ElemSet> {
    let mut out = Vec::new();
    for id in ceil.iter() {
        let cand = if x.contains(id) {
            if floor.contains(id) {
                continue;
            }
            x.without(id)
        } else {
            x.with(id)
        };
        if inst.feasible(cand) {
            out.push(cand);
        }
    }
    out
}

/// Breadth-first search from the source, depth-capped at the budget ℓ,
/// visiting only sets `X` with `floor ⊆ X ⊆ ceil`.
pub fn bfs_restricted(
    inst: &ReconfigurationInstance,
    floor: ElemSet,
    ceil: ElemSet,
    budget: SearchBudget,
) -> Result<SearchResult> {
    let source = inst.source();
    let target = inst.target();
    debug_assert!(floor.is_subset_of(source) && source.is_subset_of(ceil));
    debug_assert!(floor.is_subset_of(target) && target.is_subset_of(ceil));

    if source == target {
        return Ok(SearchResult {
            reachable: true,
            distance: Some(0),
            sequence: Some(ReconfigurationSequence::new(source, vec![])),
            nodes_expanded: 0,
        });
    }

    let mut visited: HashMap<u128, (u32, Option<(u128, Step)>)> = HashMap::new();
    visited.insert(source.mask(), (0, None));
    let mut queue = VecDeque::from([source]);
    let mut expanded = 0usize;

    while let Some(x) = queue.pop_front() {
        let dist = visited[&x.mask()].0;
        if dist >= inst.l() {
            continue;
        }
        if expanded >= budget.max_expansions {
            return Err(Error::BudgetExhausted(expanded));
        }
        expanded += 1;
        for id in ceil.iter() {
            let (cand, step) = if x.contains(id) {
                if floor.contains(id) {
                    continue;
                }
                (x.without(id), Step::Remove(id))
            } else {
                (x.with(id), Step::Add(id))
            };
            if visited.contains_key(&cand.mask()) || !inst.feasible(cand) {
                continue;
            }
            visited.insert(cand.mask(), (dist + 1, Some((x.mask(), step))));
            if cand == target {
                let steps = reconstruct(&visited, target.mask());
                return Ok(SearchResult {
                    reachable: true,
                    distance: Some(dist + 1),
                    sequence: Some(ReconfigurationSequence::new(source, steps)),
                    nodes_expanded: expanded,
                });
            }
            queue.push_back(cand);
        }
    }
    Ok(SearchResult::unreachable(expanded))
}

fn reconstruct(visited: &HashMap<u128, (u32, Option<(u128, Step)>)>, end: u128) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut cur = end;
    while let (_, Some((prev, step))) = visited[&cur] {
        steps.push(step);
        cur = prev;
    }
    steps.reverse();
    steps
}

/// Exhaustive shortest-path search over the whole reconfiguration graph.
pub fn bfs_reconfigure(inst: &ReconfigurationInstance) -> Result<SearchResult> {
    bfs_reconfigure_with(inst, SearchBudget::default())
}

pub fn bfs_reconfigure_with(
    inst: &ReconfigurationInstance,
    budget: SearchBudget,
) -> Result<SearchResult> {
    bfs_restricted(inst, ElemSet::EMPTY, ElemSet::full(inst.universe()), budget)
}

/// Fast path for ℓ ≤ |S∖T| + |T∖S|: below the bound nothing is reachable;
/// at the bound every step is forced to touch a symmetric-difference element
/// exactly once, so the search stays inside `C ∪ B`, `B ⊆ S∖T ∪ T∖S`.
pub fn touch_once_solve(inst: &ReconfigurationInstance) -> Result<SearchResult> {
    touch_once_solve_with(inst, SearchBudget::default())
}

pub fn touch_once_solve_with(
    inst: &ReconfigurationInstance,
    budget: SearchBudget,
) -> Result<SearchResult> {
    let part = partition_instance(inst);
    let bound = part.s_d.len() + part.t_a.len();
    if inst.l() > bound {
        return Err(Error::NotTouchOnce { l: inst.l(), bound });
    }
    if inst.l() < bound {
        return Ok(SearchResult::unreachable(0));
    }
    let ceil = part.c.union(part.s_d).union(part.t_a);
    bfs_restricted(inst, part.c, ceil, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;
    use crate::instance::{ProblemKind, Structure};
    use crate::sequence::validate_sequence;

    fn set(elems: &[u32]) -> ElemSet {
        ElemSet::from_elems(elems.iter().copied())
    }

    fn single_edge_vc(s: &[u32], t: &[u32], k: u32, l: u32) -> ReconfigurationInstance {
        ReconfigurationInstance::new(
            ProblemKind::VertexCover,
            Structure::Graph(MultiGraph::new_simple(2, vec![(1, 2)]).unwrap()),
            set(s),
            set(t),
            k,
            l,
        )
        .unwrap()
    }

    #[test]
    fn neighbor_lists() {
        let i = single_edge_vc(&[1, 2], &[1], 2, 1);
        assert_eq!(neighbors(&i, set(&[1, 2])), vec![set(&[2]), set(&[1])]);

        let i = single_edge_vc(&[1], &[2], 1, 1);
        assert_eq!(neighbors(&i, set(&[1])), Vec::<ElemSet>::new());

        let empty3 = ReconfigurationInstance::new(
            ProblemKind::IndependentSet,
            Structure::Graph(MultiGraph::new_simple(3, vec![]).unwrap()),
            set(&[1]),
            set(&[2]),
            1,
            2,
        )
        .unwrap();
        assert_eq!(neighbors(&empty3, set(&[1])), vec![set(&[1, 2]), set(&[1, 3])]);
    }

    #[test]
    fn bfs_single_edge() {
        let i = single_edge_vc(&[1], &[2], 2, 2);
        let r = bfs_reconfigure(&i).unwrap();
        assert!(r.reachable);
        assert_eq!(r.distance, Some(2));
        let seq = r.sequence.unwrap();
        assert_eq!(seq.steps, vec![Step::Add(2), Step::Remove(1)]);
        assert!(validate_sequence(&i, &seq).valid);
    }

    #[test]
    fn bfs_identity_and_dead_end() {
        let i = single_edge_vc(&[1], &[1], 2, 0);
        let r = bfs_reconfigure(&i).unwrap();
        assert_eq!(r.distance, Some(0));
        assert!(r.sequence.unwrap().is_empty());

        let i = single_edge_vc(&[1], &[2], 1, 10);
        let r = bfs_reconfigure(&i).unwrap();
        assert!(!r.reachable);
        assert_eq!(r.distance, None);
        assert_eq!(r.sequence, None);
    }

    #[test]
    fn depth_cap_hides_longer_paths() {
        let i = single_edge_vc(&[1], &[2], 2, 1);
        assert!(!bfs_reconfigure(&i).unwrap().reachable);
    }

    #[test]
    fn touch_once_agreement() {
        let i = single_edge_vc(&[1], &[2], 2, 2);
        let r = touch_once_solve(&i).unwrap();
        assert!(r.reachable);
        assert_eq!(r.distance, Some(2));
        assert!(validate_sequence(&i, &r.sequence.unwrap()).valid);

        let i = single_edge_vc(&[1], &[2], 2, 1);
        let r = touch_once_solve(&i).unwrap();
        assert!(!r.reachable);
        assert_eq!(r.nodes_expanded, 0);

        let i = single_edge_vc(&[1], &[1], 2, 0);
        assert_eq!(touch_once_solve(&i).unwrap().distance, Some(0));

        let i = single_edge_vc(&[1], &[2], 2, 3);
        assert!(matches!(touch_once_solve(&i), Err(Error::NotTouchOnce { l: 3, bound: 2 })));
    }

    #[test]
    fn budget_guard() {
        let i = single_edge_vc(&[1], &[2], 2, 2);
        let err = bfs_reconfigure_with(&i, SearchBudget { max_expansions: 0 }).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(0)));
    }
}
