//! Reconfiguration sequences and their validation.

use crate::instance::ReconfigurationInstance;
use crate::set::ElemSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Add(u32),
    Remove(u32),
}

impl Step {
    pub fn element(self) -> u32 {
        match self {
            Step::Add(e) | Step::Remove(e) => e,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReconfigurationSequence {
    pub start: ElemSet,
    pub steps: Vec<Step>,
}

impl ReconfigurationSequence {
    pub fn new(start: ElemSet, steps: Vec<Step>) -> Self {
        ReconfigurationSequence { start, steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All visited sets, starting with `start`.  Ill-formed steps (adding a
    /// present element, removing an absent one) are applied as stated and
    /// caught by validation, not here.
    pub fn states(&self) -> Vec<ElemSet> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.start;
        out.push(cur);
        for &step in &self.steps {
            match step {
                Step::Add(e) => cur.insert(e),
                Step::Remove(e) => cur.remove(e),
            }
            out.push(cur);
        }
        out
    }

    pub fn final_set(&self) -> ElemSet {
        *self.states().last().expect("states always contains the start")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Sequence does not begin at the instance source.
    StartMismatch,
    /// Step adds an element already present.
    AddPresent,
    /// Step removes an element not present.
    RemoveAbsent,
    /// Step touches an element outside the universe.
    OutOfUniverse,
    /// The set after the step is infeasible or breaks the size bound.
    InfeasibleState,
    /// More steps than the budget allows.
    BudgetExceeded,
    /// Final set differs from the instance target.
    FinalMismatch,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Violation::StartMismatch => "sequence does not start at the source",
            Violation::AddPresent => "adds an element that is already present",
            Violation::RemoveAbsent => "removes an element that is not present",
            Violation::OutOfUniverse => "touches an element outside the universe",
            Violation::InfeasibleState => "reaches an infeasible set",
            Violation::BudgetExceeded => "exceeds the step budget",
            Violation::FinalMismatch => "does not end at the target",
        };
        f.write_str(s)
    }
}

/// Outcome of validating a sequence against an instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub valid: bool,
    pub length: usize,
    /// First violating step (1-based; 0 for start/final conditions) and the
    /// reason, when invalid.
    pub failure: Option<(usize, Violation)>,
}

impl ValidationReport {
    fn ok(length: usize) -> Self {
        ValidationReport { valid: true, length, failure: None }
    }

    fn fail(length: usize, step: usize, why: Violation) -> Self {
        ValidationReport { valid: false, length, failure: Some((step, why)) }
    }
}

/// Check that `seq` transforms the source into the target through feasible
/// sets, one element at a time, within the budget.  Failures are reported,
/// not raised.
pub fn validate_sequence(
    inst: &ReconfigurationInstance,
    seq: &ReconfigurationSequence,
) -> ValidationReport {
    let len = seq.len();
    if seq.start != inst.source() {
        return ValidationReport::fail(len, 0, Violation::StartMismatch);
    }
    if len as u64 > inst.l() as u64 {
        return ValidationReport::fail(len, 0, Violation::BudgetExceeded);
    }
    let mut cur = seq.start;
    for (i, &step) in seq.steps.iter().enumerate() {
        let e = step.element();
        if e < 1 || e > inst.universe() {
            return ValidationReport::fail(len, i + 1, Violation::OutOfUniverse);
        }
        match step {
            Step::Add(e) => {
                if cur.contains(e) {
                    return ValidationReport::fail(len, i + 1, Violation::AddPresent);
                }
                cur.insert(e);
            }
            Step::Remove(e) => {
                if !cur.contains(e) {
                    return ValidationReport::fail(len, i + 1, Violation::RemoveAbsent);
                }
                cur.remove(e);
            }
        }
        if !inst.feasible(cur) {
            return ValidationReport::fail(len, i + 1, Violation::InfeasibleState);
        }
    }
    if cur != inst.target() {
        return ValidationReport::fail(len, 0, Violation::FinalMismatch);
    }
    ValidationReport::ok(len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;
    use crate::instance::{ProblemKind, Structure};

    fn set(elems: &[u32]) -> ElemSet {
        ElemSet::from_elems(elems.iter().copied())
    }

    fn inst(k: u32, l: u32) -> ReconfigurationInstance {
        // Path 1-2-3, vertex cover, S = {2}, T = {1, 3}.
        ReconfigurationInstance::new(
            ProblemKind::VertexCover,
            Structure::Graph(MultiGraph::new_simple(3, vec![(1, 2), (2, 3)]).unwrap()),
            set(&[2]),
            set(&[1, 3]),
            k,
            l,
        )
        .unwrap()
    }

    #[test]
    fn valid_sequence() {
        let i = inst(3, 3);
        let seq = ReconfigurationSequence::new(
            set(&[2]),
            vec![Step::Add(1), Step::Add(3), Step::Remove(2)],
        );
        let rep = validate_sequence(&i, &seq);
        assert!(rep.valid, "{:?}", rep);
        assert_eq!(rep.length, 3);
    }

    #[test]
    fn infeasible_intermediate_is_flagged() {
        // Removing 2 first uncovers both edges.
        let i = inst(3, 3);
        let seq = ReconfigurationSequence::new(
            set(&[2]),
            vec![Step::Remove(2), Step::Add(1), Step::Add(3)],
        );
        let rep = validate_sequence(&i, &seq);
        assert_eq!(rep.failure, Some((1, Violation::InfeasibleState)));
    }

    #[test]
    fn capacity_violation_is_infeasible() {
        // k = 2 forbids the intermediate {1, 2, 3}.
        let i = inst(2, 3);
        let seq = ReconfigurationSequence::new(
            set(&[2]),
            vec![Step::Add(1), Step::Add(3), Step::Remove(2)],
        );
        let rep = validate_sequence(&i, &seq);
        assert_eq!(rep.failure, Some((2, Violation::InfeasibleState)));
    }

    #[test]
    fn budget_final_and_step_shape() {
        let i = inst(3, 2);
        let long = ReconfigurationSequence::new(
            set(&[2]),
            vec![Step::Add(1), Step::Add(3), Step::Remove(2)],
        );
        assert_eq!(validate_sequence(&i, &long).failure, Some((0, Violation::BudgetExceeded)));

        let i = inst(3, 3);
        let wrong_final =
            ReconfigurationSequence::new(set(&[2]), vec![Step::Add(1), Step::Add(3)]);
        assert_eq!(
            validate_sequence(&i, &wrong_final).failure,
            Some((0, Violation::FinalMismatch))
        );
        let dup = ReconfigurationSequence::new(set(&[2]), vec![Step::Add(2)]);
        assert_eq!(validate_sequence(&i, &dup).failure, Some((1, Violation::AddPresent)));
        let absent = ReconfigurationSequence::new(set(&[2]), vec![Step::Remove(3)]);
        assert_eq!(validate_sequence(&i, &absent).failure, Some((1, Violation::RemoveAbsent)));
        let wrong_start = ReconfigurationSequence::new(set(&[1, 3]), vec![]);
        assert_eq!(
            validate_sequence(&i, &wrong_start).failure,
            Some((0, Violation::StartMismatch))
        );
    }
}
