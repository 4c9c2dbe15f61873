//! CNF formulas over variables `1..=n`.
//!
//! Literals are nonzero integers in DIMACS convention: `v` is the positive
//! literal of variable `v`, `-v` the negative one.  An assignment is the set
//! of variables set to true.

use crate::error::Error;
use crate::set::{ElemSet, MAX_UNIVERSE};
use crate::Result;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clause {
    literals: Vec<i32>,
    pos: ElemSet,
    neg: ElemSet,
}

impl Clause {
    pub fn literals(&self) -> &[i32] {
        &self.literals
    }

    pub fn positives(&self) -> ElemSet {
        self.pos
    }

    pub fn negatives(&self) -> ElemSet {
        self.neg
    }

    /// Satisfied when the variables in `x` are true and all others false.
    pub fn satisfied_by(&self, x: ElemSet) -> bool {
        self.pos.intersects(x) || !self.neg.is_subset_of(x)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CnfFormula {
    vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Clauses must be non-empty lists of literals over `1..=vars`.
    pub fn new(vars: u32, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if vars > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(vars));
        }
        let mut out = Vec::with_capacity(clauses.len());
        for lits in clauses {
            if lits.is_empty() {
                return Err(Error::Parse { line: 0, msg: "empty clause".into() });
            }
            let mut pos = ElemSet::EMPTY;
            let mut neg = ElemSet::EMPTY;
            for &lit in &lits {
                let v = lit.unsigned_abs();
                if lit == 0 || v > vars {
                    return Err(Error::OutOfRange { id: v, max: vars });
                }
                if lit > 0 {
                    pos.insert(v);
                } else {
                    neg.insert(v);
                }
            }
            out.push(Clause { literals: lits, pos, neg });
        }
        Ok(CnfFormula { vars, clauses: out })
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Largest clause size; 0 for an empty formula.
    pub fn max_clause_size(&self) -> u32 {
        self.clauses.iter().map(|c| c.literals.len() as u32).max().unwrap_or(0)
    }

    /// No literal is negative.
    pub fn is_monotone(&self) -> bool {
        self.clauses.iter().all(|c| c.neg.is_empty())
    }

    /// Satisfied by the assignment that is true exactly on `x`.
    pub fn satisfied_by(&self, x: ElemSet) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[u32]) -> ElemSet {
        ElemSet::from_elems(elems.iter().copied())
    }

    #[test]
    fn satisfaction() {
        // (x1 | x2) & (-x1 | x3)
        let f = CnfFormula::new(3, vec![vec![1, 2], vec![-1, 3]]).unwrap();
        assert!(f.satisfied_by(set(&[2])));
        assert!(f.satisfied_by(set(&[1, 3])));
        assert!(!f.satisfied_by(set(&[1])));
        assert!(!f.satisfied_by(set(&[])));
        assert!(!f.is_monotone());
        assert!(CnfFormula::new(2, vec![vec![1], vec![2, 1]]).unwrap().is_monotone());
    }

    #[test]
    fn rejects_empty_clause_and_bad_vars() {
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![0]]).is_err());
    }
}
