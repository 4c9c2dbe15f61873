//! Kernel for feedback-vertex-set reconfiguration on multigraphs.
//!
//! The pipeline mirrors the generic full kernel but replaces minimal-solution
//! enumeration with graph reduction: a working copy of the instance is
//! shrunk by ten rules until none applies, every removal is charged to the
//! removed vertex's role in a ledger, and the freed common vertices split
//! the instance into a family of reduced instances indexed by how many of
//! them stay in place.  A witness walk found on any reduced instance lifts
//! back to the original by prepending the prepaid source-side removals and
//! appending the prepaid target-side additions.

mod flow;
mod rules;
mod state;

pub use flow::{count_disjoint_paths, count_flower};
pub use rules::apply_rule;
pub use state::{KernelState, Piece, PieceDecomposition};

use crate::error::Error;
use crate::instance::{ProblemKind, ReconfigurationInstance, Structure};
use crate::kernel::ReducedInstance;
use crate::oracle::{bfs_restricted, SearchBudget, SearchResult};
use crate::sequence::{validate_sequence, ReconfigurationSequence, Step};
use crate::set::ElemSet;
use crate::Result;

/// Why a vertex left the working graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RemovalCategory {
    /// Common vertex with no structural role left; one unit of freed
    /// capacity the reduced family redistributes.
    CapacityFreed,
    /// Source-only vertex whose removal step is prepaid from the budget.
    SourceRemoved,
    /// Target-only vertex whose addition step is prepaid from the budget.
    TargetRemoved,
    /// Vertex outside both endpoint solutions; leaves for free.
    OutsideRemoved,
    /// Vertex every feasible state contains; capacity drops by one.
    Forced,
    /// Piece vertex deleted together with its sealed border.
    PieceRemoved,
}

impl RemovalCategory {
    pub fn token(self) -> &'static str {
        match self {
            RemovalCategory::CapacityFreed => "capacity-freed",
            RemovalCategory::SourceRemoved => "source-removed",
            RemovalCategory::TargetRemoved => "target-removed",
            RemovalCategory::OutsideRemoved => "outside-removed",
            RemovalCategory::Forced => "forced",
            RemovalCategory::PieceRemoved => "piece-removed",
        }
    }
}

/// One vertex removal, recorded in application order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LedgerEntry {
    pub vertex: u32,
    pub category: RemovalCategory,
    pub rule: u8,
}

/// Chronological record of every removal the rules performed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RemovalLedger {
    pub entries: Vec<LedgerEntry>,
}

impl RemovalLedger {
    /// Vertices removed under `category`, lowest ids first.
    pub fn vertices_in(&self, category: RemovalCategory) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .entries
            .iter()
            .filter(|entry| entry.category == category)
            .map(|entry| entry.vertex)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Reduction outcome: the fixed-point working state plus the reduced
/// family derived from its ledger.
#[derive(Clone, Debug)]
pub struct FvsKernel {
    pub state: KernelState,
    /// One entry per e = 0..=ε, ascending; instance `e` keeps the `e`
    /// lowest freed vertices in place and cycles the rest.
    pub instances: Vec<ReducedInstance>,
}

impl FvsKernel {
    pub fn epsilon(&self) -> u32 {
        self.state.epsilon()
    }
}

/// Runs the rules to their fixed point and assembles the reduced family.
pub fn kernelize_fvs(inst: &ReconfigurationInstance) -> Result<FvsKernel> {
    let mut state = KernelState::from_instance(inst)?;
    rules::reduce_to_fixpoint(&mut state);

    let freed = state.ledger().vertices_in(RemovalCategory::CapacityFreed);
    let epsilon = state.epsilon();
    debug_assert_eq!(freed.len() as u32, epsilon);
    debug_assert!(epsilon <= state.k());
    let forced = state.ledger().vertices_in(RemovalCategory::Forced).len() as u32;
    debug_assert_eq!(inst.k(), state.k() + forced);
    let prepaid = state.ledger().vertices_in(RemovalCategory::SourceRemoved).len()
        + state.ledger().vertices_in(RemovalCategory::TargetRemoved).len();
    debug_assert_eq!(i64::from(inst.l()), state.l() + prepaid as i64);

    let graph = state.reduced_graph();
    let source = inst.source().intersection(state.alive());
    let target = inst.target().intersection(state.alive());
    let mut instances = Vec::with_capacity(epsilon as usize + 1);
    for e in 0..=epsilon {
        let keep = ElemSet::from_elems(freed.iter().copied().take(e as usize));
        let k_e = state.k() - e;
        let l_e = state.l() - 2 * i64::from(epsilon - e);
        let instance = if l_e < 0 {
            None
        } else {
            Some(ReconfigurationInstance::new(
                ProblemKind::FeedbackVertexSet,
                Structure::Graph(graph.clone()),
                source,
                target,
                k_e,
                l_e as u32,
            )?)
        };
        instances.push(ReducedInstance { e, keep, k_e, l_e, instance });
    }
    Ok(FvsKernel { state, instances })
}

/// Expands a reduced walk into a walk on the original instance: prepaid
/// source-side removals first, then the cycled freed vertices, the reduced
/// steps, and the restorations in reverse.  Forced, outside and piece
/// vertices never move.
pub fn lift_sequence(
    inst: &ReconfigurationInstance,
    kernel: &FvsKernel,
    keep: ElemSet,
    reduced: &ReconfigurationSequence,
) -> ReconfigurationSequence {
    let ledger = kernel.state.ledger();
    let modify: Vec<u32> = ledger
        .vertices_in(RemovalCategory::CapacityFreed)
        .into_iter()
        .filter(|&v| !keep.contains(v))
        .collect();
    let mut steps = Vec::new();
    steps.extend(
        ledger
            .vertices_in(RemovalCategory::SourceRemoved)
            .into_iter()
            .map(Step::Remove),
    );
    steps.extend(modify.iter().copied().map(Step::Remove));
    steps.extend(reduced.steps.iter().copied());
    steps.extend(modify.iter().copied().map(Step::Add));
    steps.extend(
        ledger
            .vertices_in(RemovalCategory::TargetRemoved)
            .into_iter()
            .map(Step::Add),
    );
    ReconfigurationSequence::new(inst.source(), steps)
}

/// Kernelizes, solves the reduced instances largest `e` first, and lifts
/// the first witness.  The reported distance is the lifted walk's length:
/// a valid length ≤ ℓ, not necessarily shortest.
pub fn solve_fvs_reconfiguration(inst: &ReconfigurationInstance) -> Result<SearchResult> {
    solve_fvs_reconfiguration_with(inst, SearchBudget::default())
}

pub fn solve_fvs_reconfiguration_with(
    inst: &ReconfigurationInstance,
    budget: SearchBudget,
) -> Result<SearchResult> {
    let kernel = kernelize_fvs(inst)?;
    let ceiling = kernel.state.alive();
    let mut expanded = 0usize;
    for reduced in kernel.instances.iter().rev() {
        let Some(red_inst) = &reduced.instance else { continue };
        let result = bfs_restricted(red_inst, ElemSet::EMPTY, ceiling, budget)?;
        expanded += result.nodes_expanded;
        if !result.reachable {
            continue;
        }
        let reduced_seq = result.sequence.expect("reachable search results carry a sequence");
        let lifted = lift_sequence(inst, &kernel, reduced.keep, &reduced_seq);
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
