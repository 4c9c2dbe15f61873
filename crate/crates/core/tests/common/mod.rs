//! Shared randomized generators and brute-force reference oracles for the
//! integration suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reconf_core::{
    check_feasible, CnfFormula, ElemSet, MultiGraph, ProblemKind, ReconfigurationInstance,
    SetFamily, Structure, Tournament,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_simple_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> MultiGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    MultiGraph::new_simple(n, edges).unwrap()
}

pub fn random_family(
    rng: &mut ChaCha8Rng,
    universe: u32,
    sets: usize,
    max_size: u32,
) -> SetFamily {
    let mut list = Vec::with_capacity(sets);
    for _ in 0..sets {
        let size = rng.gen_range(1..=max_size.min(universe));
        let mut set: Vec<u32> = Vec::new();
        while (set.len() as u32) < size {
            let e = rng.gen_range(1..=universe);
            if !set.contains(&e) {
                set.push(e);
            }
        }
        list.push(set);
    }
    SetFamily::new(universe, list).unwrap()
}

pub fn random_tournament(rng: &mut ChaCha8Rng, n: u32) -> Tournament {
    let mut arcs = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    Tournament::new(n, arcs).unwrap()
}

pub fn random_cnf(rng: &mut ChaCha8Rng, vars: u32, clauses: usize, width: u32) -> CnfFormula {
    let mut list = Vec::with_capacity(clauses);
    for _ in 0..clauses {
        let size = rng.gen_range(1..=width.min(vars));
        let mut chosen: Vec<u32> = Vec::new();
        while (chosen.len() as u32) < size {
            let v = rng.gen_range(1..=vars);
            if !chosen.contains(&v) {
                chosen.push(v);
            }
        }
        let clause =
            chosen.iter().map(|&v| if rng.gen_bool(0.5) { v as i32 } else { -(v as i32) }).collect();
        list.push(clause);
    }
    CnfFormula::new(vars, list).unwrap()
}

pub fn random_subset_of_size(rng: &mut ChaCha8Rng, n: u32, size: u32) -> ElemSet {
    let mut set = ElemSet::EMPTY;
    while set.len() < size {
        set.insert(rng.gen_range(1..=n));
    }
    set
}

/// Every subset of `{1..=universe}`, ascending by mask.
pub fn all_subsets(universe: u32) -> impl Iterator<Item = ElemSet> {
    (0u128..(1u128 << universe))
        .map(move |m| ElemSet::from_elems((1..=universe).filter(move |&i| m >> (i - 1) & 1 == 1)))
}

/// All feasible solutions of the kind within the variant's size bound.
pub fn feasible_sets(kind: ProblemKind, structure: &Structure, k: u32) -> Vec<ElemSet> {
    all_subsets(structure.universe())
        .filter(|&x| check_feasible(kind, structure, x, kind.variant(), k).unwrap())
        .collect()
}

/// A random oracle-checkable instance, or `None` when the sampled structure
/// has no feasible solution to pick.
pub fn random_small_instance(
    rng: &mut ChaCha8Rng,
    kind: ProblemKind,
) -> Option<ReconfigurationInstance> {
    let k = rng.gen_range(1..=4);
    let l = rng.gen_range(0..=8);
    let structure = match kind {
        ProblemKind::HittingSet => {
            let universe = rng.gen_range(4..=10);
            let sets = rng.gen_range(1..=8);
            Structure::Family(random_family(rng, universe, sets, 3))
        }
        ProblemKind::FeedbackArcSetTournament => {
            let n = rng.gen_range(3..=6);
            Structure::Tournament(random_tournament(rng, n))
        }
        ProblemKind::MinWeightSat => {
            let vars = rng.gen_range(2..=8);
            let clauses = rng.gen_range(1..=6);
            Structure::Cnf(random_cnf(rng, vars, clauses, 3))
        }
        _ => {
            let n = rng.gen_range(4..=10);
            let p = rng.gen_range(0.2..0.5);
            Structure::Graph(random_simple_graph(rng, n, p))
        }
    };
    let candidates = feasible_sets(kind, &structure, k);
    if candidates.is_empty() {
        return None;
    }
    let source = candidates[rng.gen_range(0..candidates.len())];
    let target = candidates[rng.gen_range(0..candidates.len())];
    Some(ReconfigurationInstance::new(kind, structure, source, target, k, l).unwrap())
}

/// Exactly `count` random instances of the kind from a fixed seed.
pub fn instance_corpus(kind: ProblemKind, seed: u64, count: usize) -> Vec<ReconfigurationInstance> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100 * count, "sampling for {kind:?} stalled");
        if let Some(inst) = random_small_instance(&mut rng, kind) {
            out.push(inst);
        }
    }
    out
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: u32) -> Self {
        UnionFind { parent: (0..=n).collect() }
    }

    fn find(&mut self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            let up = self.parent[self.parent[v as usize] as usize];
            self.parent[v as usize] = up;
            v = up;
        }
        v
    }

    fn same(&mut self, u: u32, v: u32) -> bool {
        self.find(u) == self.find(v)
    }

    fn join(&mut self, u: u32, v: u32) {
        let (ru, rv) = (self.find(u), self.find(v));
        self.parent[ru as usize] = rv;
    }
}

/// Random graph in which both complements G−S and G−T are forests: any
/// sampled edge that would close a cycle on either side is skipped.
pub fn planted_fvs_instance(
    rng: &mut ChaCha8Rng,
    n: u32,
    p: f64,
    k: u32,
    l: u32,
) -> ReconfigurationInstance {
    let (s_size, t_size) = (rng.gen_range(0..=k), rng.gen_range(0..=k));
    let s = random_subset_of_size(rng, n, s_size);
    let t = random_subset_of_size(rng, n, t_size);
    let mut forest_s = UnionFind::new(n);
    let mut forest_t = UnionFind::new(n);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if !rng.gen_bool(p) {
                continue;
            }
            let in_s_side = !s.contains(u) && !s.contains(v);
            let in_t_side = !t.contains(u) && !t.contains(v);
            if in_s_side && forest_s.same(u, v) || in_t_side && forest_t.same(u, v) {
                continue;
            }
            if in_s_side {
                forest_s.join(u, v);
            }
            if in_t_side {
                forest_t.join(u, v);
            }
            edges.push((u, v));
        }
    }
    let g = MultiGraph::new_simple(n, edges).unwrap();
    ReconfigurationInstance::new(
        ProblemKind::FeedbackVertexSet,
        Structure::Graph(g),
        s,
        t,
        k,
        l,
    )
    .unwrap()
}

/// Brute-force minimal feasible sets of size ≤ k, sorted by size then by
/// the ascending element list, matching the enumerators' order.
pub fn brute_minimal(universe: u32, k: u32, feasible: impl Fn(ElemSet) -> bool) -> Vec<ElemSet> {
    let feasible_small: Vec<ElemSet> =
        all_subsets(universe).filter(|&x| x.len() <= k && feasible(x)).collect();
    let mut minimal: Vec<ElemSet> = feasible_small
        .iter()
        .copied()
        .filter(|&x| !feasible_small.iter().any(|&y| y != x && y.is_subset_of(x)))
        .collect();
    minimal.sort_by_key(|s| s.size_lex_key());
    minimal
}
