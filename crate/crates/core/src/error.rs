//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("element {id} out of range 1..={max}")]
    OutOfRange { id: u32, max: u32 },

    #[error("universe size {0} exceeds the supported maximum of {}", crate::set::MAX_UNIVERSE)]
    UniverseTooLarge(u32),

    #[error("self-loops and parallel edges are not allowed here")]
    NotSimple,

    #[error("structure type does not match problem kind {0}")]
    StructureMismatch(&'static str),

    #[error("variant {variant} does not match the orientation of {kind}")]
    VariantMismatch { kind: &'static str, variant: &'static str },

    #[error("{which} is not a feasible solution: {reason}")]
    Infeasible { which: &'static str, reason: String },

    #[error("budget exhausted after {0} node expansions")]
    BudgetExhausted(usize),

    #[error("l={l} exceeds |S\\T| + |T\\S| = {bound}; not a touch-once instance")]
    NotTouchOnce { l: u32, bound: u32 },

    #[error("no bounded minimal-solution enumerator for {0}")]
    UnsupportedKind(&'static str),

    #[error("{0} is not superset-closed")]
    NotSupersetClosed(&'static str),

    #[error("graph is not vertex-critical for the requested property: {0}")]
    NotCritical(String),

    #[error("lifted sequence failed validation at step {step}: {reason}")]
    LiftValidation { step: usize, reason: String },
}
