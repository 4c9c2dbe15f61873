//! Bounded enumeration of minimal solutions for the kinds that admit it:
//! hitting sets (and vertex covers through their edge family), feedback arc
//! sets in tournaments, and minimum-weight satisfying assignments.
//!
//! Each enumerator runs a bounded-depth branching search whose leaves cover
//! every minimal solution of size at most `k`, then discards duplicates and
//! non-minimal leaves.  The subset filter is exact because the leaf list is
//! complete: any feasible proper subset of a leaf contains some minimal
//! solution, which is itself a leaf.

use crate::cnf::CnfFormula;
use crate::error::Error;
use crate::family::SetFamily;
use crate::graph::MultiGraph;
use crate::instance::{ProblemKind, Structure};
use crate::set::ElemSet;
use crate::tournament::Tournament;
use crate::Result;

/// All minimal solutions of size ≤ `k`, sorted by cardinality then by the
/// ascending element list, without duplicates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalSolutionSet {
    pub solutions: Vec<ElemSet>,
    pub k: u32,
}

impl MinimalSolutionSet {
    fn from_leaves(mut leaves: Vec<ElemSet>, k: u32) -> Self {
        leaves.sort_by_key(|s| s.mask());
        leaves.dedup();
        let mut solutions: Vec<ElemSet> = leaves
            .iter()
            .copied()
            .filter(|&x| !leaves.iter().any(|&y| y != x && y.is_subset_of(x)))
            .collect();
        solutions.sort_by_key(|s| s.size_lex_key());
        MinimalSolutionSet { solutions, k }
    }
}

/// Union of all minimal solutions.
pub fn compute_m(minimals: &MinimalSolutionSet) -> ElemSet {
    minimals.solutions.iter().fold(ElemSet::EMPTY, |acc, &s| acc.union(s))
}

/// Minimal hitting sets of size ≤ `k`: branch on the elements of the first
/// unhit set, depth ≤ k, at most rᵏ leaves.
pub fn enumerate_minimal_hitting_sets(family: &SetFamily, k: u32) -> MinimalSolutionSet {
    let mut leaves = Vec::new();
    hs_branch(family, ElemSet::EMPTY, k, &mut leaves);
    MinimalSolutionSet::from_leaves(leaves, k)
}

fn hs_branch(family: &SetFamily, x: ElemSet, k: u32, leaves: &mut Vec<ElemSet>) {
    match family.first_unhit(x) {
        None => leaves.push(x),
        Some(unhit) => {
            if x.len() >= k {
                return;
            }
            for e in unhit.iter() {
                hs_branch(family, x.with(e), k, leaves);
            }
        }
    }
}

/// Minimal arc sets of size ≤ `k` whose reversal makes the tournament
/// acyclic: branch on the three arcs of the first directed triangle,
/// reversing one not-yet-reversed arc per branch, at most 3ᵏ leaves.
/// These coincide with the minimal feedback arc sets.
pub fn enumerate_minimal_fas_tournament(t: &Tournament, k: u32) -> MinimalSolutionSet {
    let mut leaves = Vec::new();
    fas_branch(t, ElemSet::EMPTY, k, &mut leaves);
    MinimalSolutionSet::from_leaves(leaves, k)
}

fn fas_branch(t: &Tournament, reversed: ElemSet, k: u32, leaves: &mut Vec<ElemSet>) {
    match t.first_triangle(reversed) {
        // A tournament without a directed triangle is acyclic.
        None => leaves.push(reversed),
        Some(triangle) => {
            if reversed.len() >= k {
                return;
            }
            for arc in triangle {
                if !reversed.contains(arc) {
                    fas_branch(t, reversed.with(arc), k, leaves);
                }
            }
        }
    }
}

/// Minimal sets P of size ≤ `k` such that "P true, everything else false"
/// satisfies the formula: branch on the unassigned positive variables of the
/// first unsatisfied clause, at most cᵏ leaves.
pub fn enumerate_minimal_weight_sat(f: &CnfFormula, k: u32) -> MinimalSolutionSet {
    let mut leaves = Vec::new();
    sat_branch(f, ElemSet::EMPTY, k, &mut leaves);
    MinimalSolutionSet::from_leaves(leaves, k)
}

fn sat_branch(f: &CnfFormula, p: ElemSet, k: u32, leaves: &mut Vec<ElemSet>) {
    match f.clauses().iter().find(|c| !c.satisfied_by(p)) {
        None => leaves.push(p),
        Some(clause) => {
            if p.len() >= k {
                return;
            }
            // Unsatisfied means no positive literal in P and all negated
            // variables inside P; only new positives can ever satisfy it.
            for v in clause.positives().difference(p).iter() {
                sat_branch(f, p.with(v), k, leaves);
            }
        }
    }
}

fn edge_family(g: &MultiGraph) -> SetFamily {
    let sets = g
        .edges()
        .iter()
        .map(|&(u, v)| if u == v { vec![u] } else { vec![u, v] })
        .collect();
    SetFamily::new(g.n(), sets).expect("edge endpoints lie in the vertex universe")
}

/// Enumerator dispatch for the kinds with a bounded minimal-solution list.
pub fn enumerate_minimal_solutions(
    kind: ProblemKind,
    structure: &Structure,
    k: u32,
) -> Result<MinimalSolutionSet> {
    match (kind, structure) {
        (ProblemKind::VertexCover, Structure::Graph(g)) => {
            Ok(enumerate_minimal_hitting_sets(&edge_family(g), k))
        }
        (ProblemKind::HittingSet, Structure::Family(f)) => {
            Ok(enumerate_minimal_hitting_sets(f, k))
        }
        (ProblemKind::FeedbackArcSetTournament, Structure::Tournament(t)) => {
            Ok(enumerate_minimal_fas_tournament(t, k))
        }
        (ProblemKind::MinWeightSat, Structure::Cnf(f)) => {
            Ok(enumerate_minimal_weight_sat(f, k))
        }
        (kind, structure) if !structure.matches(kind) => {
            Err(Error::StructureMismatch(kind.token()))
        }
        (kind, _) => Err(Error::UnsupportedKind(kind.token())),
    }
}
