//! Full-kernel pipeline for superset-closed deletion problems with a bounded
//! minimal-solution enumerator: vertex cover, hitting set, feedback arc sets
//! in tournaments, and monotone minimum-weight SAT.
//!
//! With M the union of all minimal solutions of size ≤ k and 𝓔 = |C∖M| for
//! C = S∩T, the instance splits into 𝓔+1 reduced instances indexed by the
//! number `e` of C∖M elements kept in place.  Reduced instance `e` walks
//! from S∩M to T∩M inside M with capacity k−e and budget
//! ℓ − 2(𝓔−e) − |S∖(T∪M)| − |T∖(S∪M)|: every dropped C∖M element costs a
//! removal and a re-addition, and every one-sided element outside M costs
//! its single forced touch.  A reduced walk lifts to a full walk by
//! removing the one-sided and dropped elements first and restoring them at
//! the end; superset closure keeps every intermediate set feasible.

use crate::error::Error;
use crate::instance::{partition_instance, ProblemKind, ReconfigurationInstance, Structure};
use crate::minimal::{compute_m, enumerate_minimal_solutions};
use crate::oracle::{bfs_restricted, SearchBudget, SearchResult};
use crate::sequence::{validate_sequence, ReconfigurationSequence, Step};
use crate::set::ElemSet;
use crate::family::SetFamily;
use crate::Result;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedInstance {
    pub e: u32,
    /// The `e` kept elements of C∖M, lowest ids first.
    pub keep: ElemSet,
    pub k_e: u32,
    /// Signed so that an exhausted budget stays visible.
    pub l_e: i64,
    /// Present unless the budget is negative.
    pub instance: Option<ReconfigurationInstance>,
}

impl ReducedInstance {
    pub fn trivially_no(&self) -> bool {
        self.instance.is_none()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedInstanceFamily {
    /// One entry per e = 0..=𝓔, ascending.
    pub instances: Vec<ReducedInstance>,
    /// Union of all minimal solutions of size ≤ k.
    pub m: ElemSet,
    /// C∖M: the elements every reduced instance drops or keeps frozen.
    pub dropped: ElemSet,
}

impl ReducedInstanceFamily {
    pub fn epsilon(&self) -> u32 {
        self.dropped.len()
    }
}

fn require_superset_closed(inst: &ReconfigurationInstance) -> Result<()> {
    if !inst.kind().superset_closed() {
        return Err(Error::NotSupersetClosed(inst.kind().token()));
    }
    if let (ProblemKind::MinWeightSat, Structure::Cnf(f)) = (inst.kind(), inst.structure()) {
        if !f.is_monotone() {
            return Err(Error::NotSupersetClosed("min-weight-sat with negative literals"));
        }
    }
    Ok(())
}

/// Split `inst` into the 𝓔+1 reduced instances determined by `m`.
pub fn generate_reduced_instances(
    inst: &ReconfigurationInstance,
    m: ElemSet,
) -> Result<ReducedInstanceFamily> {
    require_superset_closed(inst)?;
    let part = partition_instance(inst);
    let dropped = part.c.difference(m);
    let epsilon = dropped.len();
    let one_sided = part.s_d.difference(m).len() + part.t_a.difference(m).len();
    let source = inst.source().intersection(m);
    let target = inst.target().intersection(m);

    let mut instances = Vec::with_capacity(epsilon as usize + 1);
    for e in 0..=epsilon {
        let keep = ElemSet::from_elems(dropped.iter().take(e as usize));
        let k_e = inst.k() - e;
        let l_e =
            i64::from(inst.l()) - 2 * i64::from(epsilon - e) - i64::from(one_sided);
        let instance = if l_e < 0 {
            None
        } else {
            Some(ReconfigurationInstance::new(
                inst.kind(),
                inst.structure().clone(),
                source,
                target,
                k_e,
                l_e as u32,
            )?)
        };
        instances.push(ReducedInstance { e, keep, k_e, l_e, instance });
    }
    Ok(ReducedInstanceFamily { instances, m, dropped })
}

/// Replace every set by its intersection with `m`; sound for hitting sets
/// searched inside `m`.
pub fn project_family(family: &SetFamily, m: ElemSet) -> Result<SetFamily> {
    let sets: Vec<ElemSet> = family.sets().iter().map(|s| s.intersection(m)).collect();
    if sets.iter().any(|s| s.is_empty()) {
        return Err(Error::Infeasible {
            which: "projection",
            reason: "a family set is disjoint from the minimal-solution union".into(),
        });
    }
    SetFamily::from_sets(family.universe(), sets)
}

fn lift_sequence(
    inst: &ReconfigurationInstance,
    m: ElemSet,
    keep: ElemSet,
    reduced: &ReconfigurationSequence,
) -> ReconfigurationSequence {
    let part = partition_instance(inst);
    let modify = part.c.difference(m).difference(keep);
    let mut steps = Vec::new();
    steps.extend(part.s_d.difference(m).iter().map(Step::Remove));
    steps.extend(modify.iter().map(Step::Remove));
    steps.extend(reduced.steps.iter().copied());
    steps.extend(modify.iter().map(Step::Add));
    steps.extend(part.t_a.difference(m).iter().map(Step::Add));
    ReconfigurationSequence::new(inst.source(), steps)
}

/// Enumerate minimals, build the reduced family, solve each reduced
/// instance inside M, and lift the first witness.  The reported distance is
/// the lifted walk's length: a valid length ≤ ℓ, not necessarily shortest.
pub fn solve_via_full_kernel(inst: &ReconfigurationInstance) -> Result<SearchResult> {
    solve_via_full_kernel_with(inst, SearchBudget::default())
}

pub fn solve_via_full_kernel_with(
    inst: &ReconfigurationInstance,
    budget: SearchBudget,
) -> Result<SearchResult> {
    if !inst.kind().enumerable() {
        return Err(Error::UnsupportedKind(inst.kind().token()));
    }
    require_superset_closed(inst)?;
    let minimals = enumerate_minimal_solutions(inst.kind(), inst.structure(), inst.k())?;
    let m = compute_m(&minimals);
    let family = generate_reduced_instances(inst, m)?;

    let mut expanded = 0usize;
    // Larger e keeps more elements frozen and needs the fewest lift steps.
    for reduced in family.instances.iter().rev() {
        let Some(red_inst) = &reduced.instance else { continue };
        let result = bfs_restricted(red_inst, ElemSet::EMPTY, family.m, budget)?;
        expanded += result.nodes_expanded;
        if !result.reachable {
            continue;
        }
        let reduced_seq = result.sequence.expect("reachable search results carry a sequence");
        let lifted = lift_sequence(inst, family.m, reduced.keep, &reduced_seq);
        let report = validate_sequence(inst, &lifted);
        if let Some((step, why)) = report.failure {
            return Err(Error::LiftValidation { step, reason: why.to_string() });
        }
        return Ok(SearchResult {
            reachable: true,
            distance: Some(lifted.len() as u32),
            sequence: Some(lifted),
            nodes_expanded: expanded,
        });
    }
    Ok(SearchResult {
        reachable: false,
        distance: None,
        sequence: None,
        nodes_expanded: expanded,
    })
}
