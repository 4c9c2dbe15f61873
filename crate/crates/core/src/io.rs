//! Plain-text readers and writers for every on-disk format.
//!
//! Structured files ignore blank lines and `c ...` comment lines:
//! - graph: `p <n> <m>`, then `m` lines `e <u> <v>`; repeated lines are
//!   parallel edges and `e v v` is a self-loop
//! - set family: `f <n> <m>`, then `m` lines `<size> <elem>...`
//! - tournament: `t <n>`, then one `a <u> <v>` line per vertex pair
//! - formula: DIMACS `p cnf <vars> <clauses>` with 0-terminated clauses
//! - instance: `r <kind> <variant> <k> <l>`, a structure block, then
//!   `s <ids>...` and `t <ids>...`
//!
//! Element-set files are a single line of space-separated ids (an empty
//! line is the empty set); sequence files hold one `+<id>` or `-<id>` step
//! per line.

use crate::cnf::CnfFormula;
use crate::error::Error;
use crate::family::SetFamily;
use crate::graph::MultiGraph;
use crate::instance::{ProblemKind, ReconfigurationInstance, Structure, Variant};
use crate::sequence::Step;
use crate::set::{ElemSet, MAX_UNIVERSE};
use crate::tournament::Tournament;
use crate::Result;

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| bad(line, format!("{what}: expected a number, got `{tok}`")))
}

fn elem_id(tok: &str, line: usize) -> Result<u32> {
    let id: u32 = num(tok, line, "element id")?;
    if id < 1 || id > MAX_UNIVERSE {
        return Err(bad(line, format!("element id {id} outside 1..={MAX_UNIVERSE}")));
    }
    Ok(id)
}

/// Significant lines of a structured file: 1-based numbers, trimmed text,
/// blanks and `c` comments dropped.
struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|&(_, l)| !l.is_empty() && l != "c" && !l.starts_with("c "))
            .collect();
        Cursor { lines, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.lines.get(self.pos) {
            Some(&entry) => {
                self.pos += 1;
                Ok(entry)
            }
            None => Err(bad(self.last_line() + 1, format!("missing {what}"))),
        }
    }

    fn peek(&self, what: &str) -> Result<(usize, &'a str)> {
        self.lines
            .get(self.pos)
            .copied()
            .ok_or_else(|| bad(self.last_line() + 1, format!("missing {what}")))
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            Some(&(line, text)) => Err(bad(line, format!("unexpected trailing content `{text}`"))),
            None => Ok(()),
        }
    }

    fn last_line(&self) -> usize {
        self.lines.last().map_or(0, |&(n, _)| n)
    }
}

fn graph_at(cur: &mut Cursor) -> Result<MultiGraph> {
    let (hl, header) = cur.next("graph header `p <n> <m>`")?;
    let t: Vec<&str> = header.split_whitespace().collect();
    if t.len() != 3 || t[0] != "p" {
        return Err(bad(hl, "expected graph header `p <n> <m>`"));
    }
    let n: u32 = num(t[1], hl, "vertex count")?;
    let m: usize = num(t[2], hl, "edge count")?;
    let mut edges = Vec::with_capacity(m.min(4 * MAX_UNIVERSE as usize));
    for _ in 0..m {
        let (el, line) = cur.next("edge line `e <u> <v>`")?;
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 3 || t[0] != "e" {
            return Err(bad(el, "expected edge line `e <u> <v>`"));
        }
        edges.push((num(t[1], el, "endpoint")?, num(t[2], el, "endpoint")?));
    }
    MultiGraph::new_multi(n, edges)
}

fn family_at(cur: &mut Cursor) -> Result<SetFamily> {
    let (hl, header) = cur.next("family header `f <n> <m>`")?;
    let t: Vec<&str> = header.split_whitespace().collect();
    if t.len() != 3 || t[0] != "f" {
        return Err(bad(hl, "expected family header `f <n> <m>`"));
    }
    let n: u32 = num(t[1], hl, "universe size")?;
    let m: usize = num(t[2], hl, "set count")?;
    let mut sets = Vec::with_capacity(m.min(4 * MAX_UNIVERSE as usize));
    for _ in 0..m {
        let (sl, line) = cur.next("set line `<size> <elem>...`")?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let size: usize = num(toks[0], sl, "set size")?;
        if size == 0 {
            return Err(bad(sl, "empty sets are not allowed"));
        }
        if toks.len() != size + 1 {
            return Err(bad(sl, format!("set line announces {size} elements, has {}", toks.len() - 1)));
        }
        let elems = toks[1..].iter().map(|t| elem_id(t, sl)).collect::<Result<Vec<u32>>>()?;
        sets.push(elems);
    }
    SetFamily::new(n, sets)
}

fn tournament_at(cur: &mut Cursor) -> Result<Tournament> {
    let (hl, header) = cur.next("tournament header `t <n>`")?;
    let t: Vec<&str> = header.split_whitespace().collect();
    if t.len() != 2 || t[0] != "t" {
        return Err(bad(hl, "expected tournament header `t <n>`"));
    }
    let n: u32 = num(t[1], hl, "vertex count")?;
    if u64::from(n) * u64::from(n.saturating_sub(1)) / 2 > u64::from(MAX_UNIVERSE) {
        return Err(bad(hl, format!("tournament on {n} vertices exceeds the arc universe")));
    }
    let pairs = (n as usize) * (n as usize).saturating_sub(1) / 2;
    let mut arcs = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let (al, line) = cur.next("arc line `a <u> <v>`")?;
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 3 || t[0] != "a" {
            return Err(bad(al, "expected arc line `a <u> <v>`"));
        }
        arcs.push((num(t[1], al, "arc tail")?, num(t[2], al, "arc head")?));
    }
    Tournament::new(n, arcs)
}

fn cnf_at(cur: &mut Cursor) -> Result<CnfFormula> {
    let (hl, header) = cur.next("formula header `p cnf <vars> <clauses>`")?;
    let t: Vec<&str> = header.split_whitespace().collect();
    if t.len() != 4 || t[0] != "p" || t[1] != "cnf" {
        return Err(bad(hl, "expected formula header `p cnf <vars> <clauses>`"));
    }
    let vars: u32 = num(t[2], hl, "variable count")?;
    let m: usize = num(t[3], hl, "clause count")?;
    let mut clauses: Vec<Vec<i32>> = Vec::with_capacity(m.min(4 * MAX_UNIVERSE as usize));
    let mut current: Vec<i32> = Vec::new();
    while clauses.len() < m {
        let (cl, line) = cur.next("clause literals")?;
        for tok in line.split_whitespace() {
            if clauses.len() == m {
                return Err(bad(cl, "literals after the final clause"));
            }
            let lit: i32 = num(tok, cl, "literal")?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(bad(cl, "empty clauses are not allowed"));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        return Err(bad(cur.last_line(), "unterminated clause"));
    }
    CnfFormula::new(vars, clauses)
}

pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut cur = Cursor::new(text);
    let g = graph_at(&mut cur)?;
    cur.finish()?;
    Ok(g)
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let mut cur = Cursor::new(text);
    let f = family_at(&mut cur)?;
    cur.finish()?;
    Ok(f)
}

pub fn parse_tournament(text: &str) -> Result<Tournament> {
    let mut cur = Cursor::new(text);
    let t = tournament_at(&mut cur)?;
    cur.finish()?;
    Ok(t)
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut cur = Cursor::new(text);
    let f = cnf_at(&mut cur)?;
    cur.finish()?;
    Ok(f)
}

pub fn serialize_graph(g: &MultiGraph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

pub fn serialize_family(f: &SetFamily) -> String {
    let mut out = format!("f {} {}\n", f.universe(), f.sets().len());
    for s in f.sets() {
        out.push_str(&s.len().to_string());
        for e in s.iter() {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
    }
    out
}

pub fn serialize_tournament(t: &Tournament) -> String {
    let mut out = format!("t {}\n", t.n());
    for id in 1..=t.arc_count() {
        let (u, v) = t.arc(id, ElemSet::EMPTY);
        out.push_str(&format!("a {u} {v}\n"));
    }
    out
}

pub fn serialize_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.vars(), f.clauses().len());
    for c in f.clauses() {
        for lit in c.literals() {
            out.push_str(&format!("{lit} "));
        }
        out.push_str("0\n");
    }
    out
}

/// One line of ids; an empty first line is the empty set.
pub fn parse_vertex_set(text: &str) -> Result<ElemSet> {
    let mut lines = text.lines();
    let first = lines.next().unwrap_or("");
    for (i, l) in lines.enumerate() {
        if !l.trim().is_empty() {
            return Err(bad(i + 2, "element-set files hold a single line"));
        }
    }
    let mut set = ElemSet::EMPTY;
    for tok in first.split_whitespace() {
        set.insert(elem_id(tok, 1)?);
    }
    Ok(set)
}

pub fn serialize_vertex_set(set: ElemSet) -> String {
    let ids: Vec<String> = set.iter().map(|i| i.to_string()).collect();
    format!("{}\n", ids.join(" "))
}

pub fn parse_sequence(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let step = if let Some(rest) = line.strip_prefix('+') {
            Step::Add(elem_id(rest.trim(), i + 1)?)
        } else if let Some(rest) = line.strip_prefix('-') {
            Step::Remove(elem_id(rest.trim(), i + 1)?)
        } else {
            return Err(bad(i + 1, format!("expected `+<id>` or `-<id>`, got `{line}`")));
        };
        steps.push(step);
    }
    Ok(steps)
}

pub fn serialize_sequence(steps: &[Step]) -> String {
    let mut out = String::new();
    for &step in steps {
        match step {
            Step::Add(e) => out.push_str(&format!("+{e}\n")),
            Step::Remove(e) => out.push_str(&format!("-{e}\n")),
        }
    }
    out
}

fn tagged_set(cur: &mut Cursor, tag: &str) -> Result<ElemSet> {
    let (sl, line) = cur.next(&format!("`{tag} <ids>...` line"))?;
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.is_empty() || toks[0] != tag {
        return Err(bad(sl, format!("expected `{tag} <ids>...`")));
    }
    let mut set = ElemSet::EMPTY;
    for tok in &toks[1..] {
        set.insert(elem_id(tok, sl)?);
    }
    Ok(set)
}

pub fn parse_instance(text: &str) -> Result<ReconfigurationInstance> {
    let mut cur = Cursor::new(text);
    let (hl, header) = cur.next("instance header `r <kind> <variant> <k> <l>`")?;
    let t: Vec<&str> = header.split_whitespace().collect();
    if t.len() != 5 || t[0] != "r" {
        return Err(bad(hl, "expected instance header `r <kind> <variant> <k> <l>`"));
    }
    let kind: ProblemKind =
        t[1].parse().map_err(|_| bad(hl, format!("unknown problem kind `{}`", t[1])))?;
    let variant: Variant =
        t[2].parse().map_err(|_| bad(hl, format!("unknown variant `{}`", t[2])))?;
    if variant != kind.variant() {
        return Err(Error::VariantMismatch { kind: kind.token(), variant: variant.token() });
    }
    let k: u32 = num(t[3], hl, "capacity k")?;
    let l: u32 = num(t[4], hl, "budget l")?;
    let (sl, s) = cur.peek("structure block")?;
    let structure = match s.split_whitespace().next() {
        Some("p") if s.split_whitespace().nth(1) == Some("cnf") => Structure::Cnf(cnf_at(&mut cur)?),
        Some("p") => Structure::Graph(graph_at(&mut cur)?),
        Some("f") => Structure::Family(family_at(&mut cur)?),
        Some("t") => Structure::Tournament(tournament_at(&mut cur)?),
        _ => return Err(bad(sl, "expected a graph, family, tournament, or formula block")),
    };
    let source = tagged_set(&mut cur, "s")?;
    let target = tagged_set(&mut cur, "t")?;
    cur.finish()?;
    ReconfigurationInstance::new(kind, structure, source, target, k, l)
}

fn serialize_structure(s: &Structure) -> String {
    match s {
        Structure::Graph(g) => serialize_graph(g),
        Structure::Family(f) => serialize_family(f),
        Structure::Tournament(t) => serialize_tournament(t),
        Structure::Cnf(f) => serialize_cnf(f),
    }
}

pub fn serialize_instance(inst: &ReconfigurationInstance) -> String {
    let mut out =
        format!("r {} {} {} {}\n", inst.kind(), inst.variant(), inst.k(), inst.l());
    out.push_str(&serialize_structure(inst.structure()));
    for (tag, set) in [("s", inst.source()), ("t", inst.target())] {
        out.push_str(tag);
        for e in set.iter() {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = parse_graph("p 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);

        let multi = parse_graph("c parallel pair plus loop\np 3 3\ne 2 1\ne 1 2\ne 3 3\n").unwrap();
        assert_eq!(multi.edges(), &[(1, 2), (1, 2), (3, 3)]);
        assert_eq!(parse_graph(&serialize_graph(&multi)).unwrap(), multi);
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        let err = parse_graph("p 2 2\ne 1 2\nx 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_graph("p 2 1\ne 1 2\ne 2 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_graph("p 2 2\ne 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn family_round_trip_and_empty_set() {
        let f = parse_family("f 4 2\n2 1 2\n3 2 3 4\n").unwrap();
        assert_eq!(f.sets().len(), 2);
        assert_eq!(parse_family(&serialize_family(&f)).unwrap(), f);
        let err = parse_family("f 4 1\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn tournament_round_trip() {
        let t = parse_tournament("t 3\na 1 2\na 3 1\na 2 3\n").unwrap();
        assert_eq!(parse_tournament(&serialize_tournament(&t)).unwrap(), t);
    }

    #[test]
    fn cnf_round_trip_and_empty_clause() {
        let f = parse_cnf("p cnf 3 2\n1 -2 0\n2 3 0\n").unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(parse_cnf(&serialize_cnf(&f)).unwrap(), f);
        let split = parse_cnf("p cnf 3 2\n1 -2 0 2\n3 0\n").unwrap();
        assert_eq!(split, f);
        let err = parse_cnf("p cnf 3 2\n1 0\n0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn vertex_set_lines() {
        assert_eq!(parse_vertex_set("3 1 7\n").unwrap().to_vec(), vec![1, 3, 7]);
        assert_eq!(parse_vertex_set("\n").unwrap(), ElemSet::EMPTY);
        assert_eq!(parse_vertex_set("").unwrap(), ElemSet::EMPTY);
        assert_eq!(serialize_vertex_set(ElemSet::from_elems([2, 5])), "2 5\n");
        assert_eq!(serialize_vertex_set(ElemSet::EMPTY), "\n");
    }

    #[test]
    fn sequence_round_trip() {
        let steps = parse_sequence("+3\n-1\n").unwrap();
        assert_eq!(steps, vec![Step::Add(3), Step::Remove(1)]);
        assert_eq!(serialize_sequence(&steps), "+3\n-1\n");
        assert!(parse_sequence("*3\n").is_err());
    }

    #[test]
    fn instance_round_trip() {
        let text = "r vertex-cover deletion 2 2\np 2 1\ne 1 2\ns 1\nt 2\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.kind(), ProblemKind::VertexCover);
        assert_eq!(inst.k(), 2);
        assert_eq!(serialize_instance(&inst), text);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn tournament_instance_disambiguates_target_line() {
        let text = "r feedback-arc-set-tournament deletion 1 2\nt 3\na 1 2\na 3 1\na 2 3\ns 1\nt 2\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.kind(), ProblemKind::FeedbackArcSetTournament);
        assert_eq!(inst.source().to_vec(), vec![1]);
        assert_eq!(inst.target().to_vec(), vec![2]);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn instance_header_checks() {
        assert!(parse_instance("r vertex-cover subset 1 1\np 2 1\ne 1 2\ns 1\nt 2\n").is_err());
        assert!(parse_instance("r no-such-kind deletion 1 1\np 2 1\ne 1 2\ns 1\nt 2\n").is_err());
    }
}
