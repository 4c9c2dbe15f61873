//! Reconfiguration of subset problems under single-element steps.
//!
//! A *solution* is a subset of a finite universe (vertices of a graph,
//! elements of a set family, arcs of a tournament, variables of a CNF
//! formula).  Two solutions are adjacent when they differ in exactly one
//! element, and both respect the capacity constraint of the problem variant
//! (`|X| <= k` for deletion-style problems, `|X| >= k` for subset-style
//! problems).  Given feasible solutions `S` and `T` and a budget `l`, the
//! question is whether `T` is reachable from `S` in at most `l` steps.
//!
//! The crate provides
//! * exact search over the implicit solution graph ([`oracle`]),
//! * bounded enumeration of minimal solutions and a full-kernel solver for
//!   superset-closed problems ([`minimal`], [`kernel`]),
//! * a reduction-rule kernel for feedback vertex set reconfiguration
//!   ([`fvs`]),
//! * gadget generators that translate source problems (clique, dominating
//!   set, independent set, ...) into reconfiguration instances ([`gadgets`]).

pub mod cnf;
pub mod error;
pub mod family;
pub mod fvs;
pub mod gadgets;
pub mod graph;
pub mod instance;
pub mod io;
pub mod kernel;
pub mod minimal;
pub mod oracle;
pub mod sequence;
pub mod set;
pub mod tournament;

pub use cnf::CnfFormula;
pub use error::Error;
pub use family::SetFamily;
pub use graph::MultiGraph;
pub use instance::{
    check_feasible, partition_instance, InstancePartition, ProblemKind, ReconfigurationInstance,
    Structure, Variant,
};
pub use sequence::{validate_sequence, ReconfigurationSequence, Step, ValidationReport};
pub use set::ElemSet;
pub use tournament::Tournament;

pub type Result<T> = std::result::Result<T, Error>;
