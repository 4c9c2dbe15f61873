//! Connectivity counts used by the reduction rules: internally disjoint
//! path counts between vertex pairs, and the maximum number of cycles
//! through a vertex that pairwise share only that vertex.

use petgraph::algo::matching::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::set::ElemSet;

use super::state::KernelState;

/// Maximum number of pairwise internally vertex-disjoint `v`–`w` paths.
///
/// Direct edges are paths of their own; the rest is a unit-capacity flow in
/// the vertex-split network, augmented one path at a time.
pub fn count_disjoint_paths(state: &KernelState, v: u32, w: u32) -> u32 {
    assert_ne!(v, w);
    assert!(state.alive().contains(v) && state.alive().contains(w));
    let direct = state.instances_between(v, w);

    // Node 2x is the in-copy of vertex x, node 2x+1 the out-copy.
    let inn = |x: u32| (2 * x) as usize;
    let out = |x: u32| (2 * x + 1) as usize;
    let size = 2 * state.n() as usize + 2;
    let mut cap = vec![vec![0u8; size]; size];
    for x in state.alive().iter() {
        if x != v && x != w {
            cap[inn(x)][out(x)] = 1;
        }
    }
    let key = (v.min(w), v.max(w));
    for &(a, b) in state.edges() {
        if a == b || (a, b) == key {
            continue;
        }
        cap[out(a)][inn(b)] = 1;
        cap[out(b)][inn(a)] = 1;
    }

    let (source, sink) = (out(v), inn(w));
    let mut flow = 0u32;
    loop {
        let mut parent = vec![usize::MAX; size];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for y in 0..size {
                if cap[x][y] > 0 && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    direct + flow
}

/// Maximum number of cycles through `v` that pairwise intersect exactly in
/// `v`.
///
/// Self-loops and parallel-pair partners are petals by themselves; taking
/// them greedily never hurts, since any packing routes at most one petal
/// through such a partner.  The remaining petals are vertex-disjoint paths
/// between distinct single-edge neighbors of `v`, counted by Gallai's
/// reduction: double every non-terminal, join the copies, and read the
/// packing size off a maximum matching.
pub fn count_flower(state: &KernelState, v: u32) -> u32 {
    assert!(state.alive().contains(v));
    let mut count = state.loop_count(v);

    let mut degenerate = ElemSet::EMPTY;
    let mut terminals = ElemSet::EMPTY;
    for w in state.alive().iter() {
        if w == v {
            continue;
        }
        match state.instances_between(v, w) {
            0 => {}
            1 => terminals.insert(w),
            _ => degenerate.insert(w),
        }
    }
    count += degenerate.len();
    if terminals.len() < 2 {
        return count;
    }

    let rest = state.alive().without(v).difference(degenerate);
    let mut graph: UnGraph<u32, ()> = UnGraph::new_undirected();
    let mut copies: Vec<[Option<NodeIndex>; 2]> = vec![[None; 2]; state.n() as usize + 1];
    for x in rest.iter() {
        if terminals.contains(x) {
            copies[x as usize][0] = Some(graph.add_node(x));
        } else {
            let first = graph.add_node(x);
            let second = graph.add_node(x);
            graph.add_edge(first, second, ());
            copies[x as usize] = [Some(first), Some(second)];
        }
    }
    let mut linked: Vec<(u32, u32)> = Vec::new();
    for &(a, b) in state.edges() {
        if a == b || !rest.contains(a) || !rest.contains(b) {
            continue;
        }
        if linked.contains(&(a, b)) {
            continue;
        }
        linked.push((a, b));
        for na in copies[a as usize].iter().flatten() {
            for nb in copies[b as usize].iter().flatten() {
                graph.add_edge(*na, *nb, ());
            }
        }
    }
    let matched = maximum_matching(&graph).edges().count() as u32;
    let non_terminals = rest.difference(terminals).len();
    count + matched - non_terminals
}
