//! Reduction rules for the feedback-vertex-set kernel.
//!
//! Rules are numbered 1 through 10 and tried in that order; after any rule
//! fires the scan restarts from rule 1, so a rule only ever sees states
//! where all lower-numbered rules are exhausted.  Within a rule the lowest
//! eligible vertex (or lexicographically first pair / first piece) fires.
//!
//!  1. remove a degree-0 vertex
//!  2. remove a degree-1 vertex
//!  3. trim a parallel bundle of three or more edge instances down to two
//!  4. contract away a degree-2 vertex outside both endpoint solutions
//!  5. remove a self-loop vertex as forced
//!  6. add a parallel pair between vertices joined by k+2 disjoint paths
//!  7. remove a vertex carrying k+1 cycles disjoint outside it as forced
//!  8. remove a vertex with k+1 parallel-pair partners as forced
//!  9. drop the only edge from a piece's governing border vertex into it
//! 10. remove a piece whose border is pairwise parallel-connected, forcing
//!     every border vertex
//!
//! Rules 1 and 2 charge the removal to the vertex's role: common vertices
//! become freed capacity, source-only and target-only vertices each cost
//! one step of budget, outside vertices are free.  Rules 5, 7, 8 and 10
//! remove vertices every feasible state must contain, so capacity drops
//! with each.  Rule 9 requires the border vertex to form a parallel pair
//! with every other border vertex of the piece; rule 10 requires parallel
//! pairs between all border pairs.  Both requirements are deliberately
//! stronger than connections through degree-2 paths: a path witness has
//! interior vertices that a state may use instead of the endpoints, which
//! breaks the exchange arguments these rules rest on.

use super::flow::{count_disjoint_paths, count_flower};
use super::state::{KernelState, Role};

/// Tries one rule; returns whether it fired.
pub fn apply_rule(state: &mut KernelState, rule: u8) -> bool {
    match rule {
        1 => rule_degree_zero(state),
        2 => rule_degree_one(state),
        3 => rule_trim_parallel(state),
        4 => rule_contract_outsider(state),
        5 => rule_self_loop(state),
        6 => rule_path_bundle(state),
        7 => rule_flower(state),
        8 => rule_parallel_partners(state),
        9 => rule_border_edge(state),
        10 => rule_sealed_piece(state),
        _ => panic!("rules are numbered 1 through 10"),
    }
}

/// Applies rules until none fires.
pub(crate) fn reduce_to_fixpoint(state: &mut KernelState) {
    let mut guard = 0u32;
    loop {
        let fired = (1..=10u8).any(|rule| apply_rule(state, rule));
        if !fired {
            break;
        }
        guard += 1;
        assert!(guard <= 100_000, "reduction failed to reach a fixed point");
    }
}

fn rule_degree_zero(state: &mut KernelState) -> bool {
    for v in state.alive().iter() {
        if state.degree(v) == 0 {
            state.remove_accounted(v, 1);
            return true;
        }
    }
    false
}

fn rule_degree_one(state: &mut KernelState) -> bool {
    for v in state.alive().iter() {
        if state.degree(v) == 1 {
            state.remove_accounted(v, 2);
            return true;
        }
    }
    false
}

fn rule_trim_parallel(state: &mut KernelState) -> bool {
    let mut found = None;
    let edges = state.edges();
    let mut i = 0;
    while i < edges.len() {
        let key = edges[i];
        let mut j = i;
        while j < edges.len() && edges[j] == key {
            j += 1;
        }
        if key.0 != key.1 && j - i >= 3 {
            found = Some((key, j - i));
            break;
        }
        i = j;
    }
    let Some(((a, b), count)) = found else {
        return false;
    };
    for _ in 2..count {
        state.remove_one_edge(a, b);
    }
    true
}

fn rule_contract_outsider(state: &mut KernelState) -> bool {
    let mut found = None;
    for v in state.alive().iter() {
        if state.role(v) == Role::Outside && state.degree(v) == 2 && state.loop_count(v) == 0 {
            let others = state.incident_others(v);
            debug_assert_eq!(others.len(), 2);
            found = Some((v, others[0], others[1]));
            break;
        }
    }
    let Some((v, w, x)) = found else {
        return false;
    };
    state.remove_outsider(v, 4);
    state.add_edge(w, x);
    true
}

fn rule_self_loop(state: &mut KernelState) -> bool {
    for v in state.alive().iter() {
        if state.loop_count(v) > 0 {
            state.remove_forced(v, 5);
            return true;
        }
    }
    false
}

fn rule_path_bundle(state: &mut KernelState) -> bool {
    let need = state.k() + 2;
    let mut found = None;
    'scan: for v in state.a_set().iter() {
        if state.degree(v) < need {
            continue;
        }
        for w in state.alive().iter() {
            if w == v || state.degree(w) < need || state.instances_between(v, w) >= 2 {
                continue;
            }
            if count_disjoint_paths(state, v, w) >= need {
                found = Some((v, w));
                break 'scan;
            }
        }
    }
    let Some((v, w)) = found else {
        return false;
    };
    state.add_edge(v, w);
    state.add_edge(v, w);
    true
}

fn rule_flower(state: &mut KernelState) -> bool {
    let need = state.k() + 1;
    let mut found = None;
    for v in state.a_set().iter() {
        // Every cycle in a packing uses two edge instances at its center.
        if state.degree(v) >= 2 * need && count_flower(state, v) >= need {
            found = Some(v);
            break;
        }
    }
    let Some(v) = found else {
        return false;
    };
    state.remove_forced(v, 7);
    true
}

fn rule_parallel_partners(state: &mut KernelState) -> bool {
    let need = state.k() + 1;
    let mut found = None;
    for v in state.alive().iter() {
        let partners = state
            .alive()
            .iter()
            .filter(|&w| w != v && state.instances_between(v, w) >= 2)
            .count() as u32;
        if partners >= need {
            found = Some(v);
            break;
        }
    }
    let Some(v) = found else {
        return false;
    };
    state.remove_forced(v, 8);
    true
}

fn rule_border_edge(state: &mut KernelState) -> bool {
    let mut found = None;
    'scan: for piece in state.pieces().pieces {
        for v in piece.border.iter() {
            let governs = piece
                .border
                .iter()
                .all(|u| u == v || state.parallel_pair(v, u));
            if !governs {
                continue;
            }
            let mut inside: Vec<u32> = state
                .incident_others(v)
                .into_iter()
                .filter(|&w| piece.vertices.contains(w))
                .collect();
            inside.dedup();
            if inside.len() == 1 {
                found = Some((v, inside[0]));
                break 'scan;
            }
        }
    }
    let Some((v, w)) = found else {
        return false;
    };
    state.remove_one_edge(v, w);
    true
}

fn rule_sealed_piece(state: &mut KernelState) -> bool {
    let mut found = None;
    for piece in state.pieces().pieces {
        if piece.border.is_empty() {
            continue;
        }
        let border: Vec<u32> = piece.border.iter().collect();
        let sealed = border
            .iter()
            .enumerate()
            .all(|(i, &u)| border[i + 1..].iter().all(|&w| state.parallel_pair(u, w)));
        if sealed {
            found = Some(piece);
            break;
        }
    }
    let Some(piece) = found else {
        return false;
    };
    for x in piece.vertices.iter() {
        state.remove_piece_vertex(x, 10);
    }
    for u in piece.border.iter() {
        state.remove_forced(u, 10);
    }
    true
}
