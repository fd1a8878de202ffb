//! Structural checks. Violations are data: a graph is admissible iff its
//! report is empty.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::cycle::CycleKind;
use super::equipped::{EquippedGraph, VertexKind};
use super::four_colour::{Colour, FourColourGraph, NominalTable};
use crate::invariants::cycles::{corner_orbits, two_colour_cycles};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationCode {
    Empty,
    MissingColourEdge,
    DuplicateColourEdge,
    LoopEdge,
    BadCOrder,
    Disconnected,
    BadCStarOrbit,
    MBadNeighbour,
    MParallelEdge,
    EBadDegree,
    EBadNeighbour,
    ESameL,
    EBadOrientation,
    ABadDegree,
    ABadNeighbour,
    LBadDegree,
    LMixedOrientation,
    FourColourNotAdmissible,
    MissingCycleTag,
    UnexpectedCycleTag,
    WrongCycleKind,
    InvalidCycle,
    DuplicateCycleTag,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        use ViolationCode::*;
        match self {
            Empty => "Empty",
            MissingColourEdge => "MissingColourEdge",
            DuplicateColourEdge => "DuplicateColourEdge",
            LoopEdge => "LoopEdge",
            BadCOrder => "BadCOrder",
            Disconnected => "Disconnected",
            BadCStarOrbit => "BadCStarOrbit",
            MBadNeighbour => "MBadNeighbour",
            MParallelEdge => "MParallelEdge",
            EBadDegree => "EBadDegree",
            EBadNeighbour => "EBadNeighbour",
            ESameL => "ESameL",
            EBadOrientation => "EBadOrientation",
            ABadDegree => "ABadDegree",
            ABadNeighbour => "ABadNeighbour",
            LBadDegree => "LBadDegree",
            LMixedOrientation => "LMixedOrientation",
            FourColourNotAdmissible => "FourColourNotAdmissible",
            MissingCycleTag => "MissingCycleTag",
            UnexpectedCycleTag => "UnexpectedCycleTag",
            WrongCycleKind => "WrongCycleKind",
            InvalidCycle => "InvalidCycle",
            DuplicateCycleTag => "DuplicateCycleTag",
        }
    }

    /// Codes describing a single vertex's neighbourhood, as opposed to
    /// global properties (connectivity, corner orbits).
    pub fn is_local(self) -> bool {
        use ViolationCode::*;
        matches!(
            self,
            Empty | MissingColourEdge | DuplicateColourEdge | LoopEdge | BadCOrder
        )
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.is_empty()
    }

    /// Codes in report order, with repetitions.
    pub fn codes(&self) -> Vec<ViolationCode> {
        self.violations.iter().map(|v| v.code).collect()
    }

    pub fn code_set(&self) -> BTreeSet<ViolationCode> {
        self.violations.iter().map(|v| v.code).collect()
    }

    fn push(&mut self, code: ViolationCode, detail: impl Into<String>) {
        self.violations.push(Violation {
            code,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}: {}", v.code, v.detail)?;
        }
        Ok(())
    }
}

/// Checks only the per-vertex structure: one s-, t- and u-edge each, no
/// loops, c-positions forming 1..=n_v.
pub fn local_report(g: &FourColourGraph) -> ValidationReport {
    let mut report = ValidationReport::default();
    if g.vertex_count() == 0 {
        report.push(ViolationCode::Empty, "graph has no vertices");
        return report;
    }
    for e in g.edges() {
        if e.is_loop() {
            report.push(
                ViolationCode::LoopEdge,
                format!("edge {} is a loop at {}", e.id, g.vertex_id(e.ends[0])),
            );
        }
    }
    for v in 0..g.vertex_count() {
        let id = g.vertex_id(v);
        for colour in [Colour::S, Colour::T, Colour::U] {
            let count = g.incident(v).iter().filter(|&&e| g.edge(e).colour == colour).count();
            if count == 0 {
                report.push(
                    ViolationCode::MissingColourEdge,
                    format!("vertex {id} has no {colour}-edge"),
                );
            } else if count > 1 {
                report.push(
                    ViolationCode::DuplicateColourEdge,
                    format!("vertex {id} has {count} {colour}-edges"),
                );
            }
        }
        let mut positions: Vec<u32> = g
            .incident(v)
            .iter()
            .filter(|&&e| g.edge(e).colour == Colour::C && !g.edge(e).is_loop())
            .filter_map(|&e| g.edge(e).position_at(v))
            .collect();
        positions.sort_unstable();
        let expected: Vec<u32> = (1..=positions.len() as u32).collect();
        if positions != expected {
            report.push(
                ViolationCode::BadCOrder,
                format!(
                    "c-positions at vertex {id} are {positions:?}, expected 1..={}",
                    positions.len()
                ),
            );
        }
    }
    report
}

pub fn validate_four_colour(g: &FourColourGraph) -> ValidationReport {
    let mut report = local_report(g);
    if g.vertex_count() == 0 {
        return report;
    }
    let unreached = unreachable_vertices(g.vertex_count(), |v| {
        g.incident(v).iter().map(move |&e| g.edge(e).other(v))
    });
    if !unreached.is_empty() {
        let names: Vec<&str> = unreached.iter().map(|&v| g.vertex_id(v)).collect();
        report.push(
            ViolationCode::Disconnected,
            format!("vertices {} unreachable from {}", names.join(","), g.vertex_id(0)),
        );
    }
    if let Some(table) = NominalTable::build(g) {
        for orbit in corner_orbits(g, &table) {
            if orbit.len() != 4 {
                let (c, _) = orbit[0];
                report.push(
                    ViolationCode::BadCStarOrbit,
                    format!(
                        "corner orbit of ({},{}) at {} has length {}",
                        c.low_index,
                        c.low_index + 1,
                        g.vertex_id(c.vertex),
                        orbit.len()
                    ),
                );
            }
        }
    }
    report
}

fn unreachable_vertices<F, I>(n: usize, neighbours: F) -> Vec<usize>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    (0..n).filter(|&v| !seen[v]).collect()
}

pub fn validate_equipped(u: &EquippedGraph) -> ValidationReport {
    use ViolationCode::*;
    let mut report = ValidationReport::default();
    if u.vertex_count() == 0 {
        report.push(Empty, "graph has no vertices");
        return report;
    }
    let id = |v: usize| u.vertex(v).id.as_str();

    for v in 0..u.vertex_count() {
        let edges = u.incident(v);
        let degree = u.degree(v);
        match u.kind(v) {
            VertexKind::M(g) => {
                let mut seen = HashSet::new();
                for &e in edges {
                    let w = u.edge(e).other(v);
                    if !u.kind(w).is_l() || w == v {
                        report.push(MBadNeighbour, format!("M-vertex {} is adjacent to {}", id(v), id(w)));
                    } else if !seen.insert(w) {
                        report.push(
                            MParallelEdge,
                            format!("M-vertex {} has several edges to {}", id(v), id(w)),
                        );
                    }
                }
                let sub = validate_four_colour(g);
                if !sub.is_empty() {
                    report.push(FourColourNotAdmissible, format!("graph of {}: {}", id(v), sub));
                }
            }
            VertexKind::E(_) => {
                if degree != 2 {
                    report.push(EBadDegree, format!("E-vertex {} has degree {degree}", id(v)));
                    continue;
                }
                let ends: Vec<usize> = edges.iter().map(|&e| u.edge(e).other(v)).collect();
                if ends.iter().any(|&w| !u.kind(w).is_l()) {
                    report.push(EBadNeighbour, format!("E-vertex {} has a non-L neighbour", id(v)));
                } else if ends[0] == ends[1] {
                    report.push(
                        ESameL,
                        format!("both edges of E-vertex {} go to {}", id(v), id(ends[0])),
                    );
                }
                let entering = edges.iter().filter(|&&e| u.edge(e).head == v).count();
                if entering != 1 {
                    report.push(
                        EBadOrientation,
                        format!("E-vertex {} has {entering} entering edges, expected 1", id(v)),
                    );
                }
            }
            VertexKind::A => {
                if degree != 1 {
                    report.push(ABadDegree, format!("A-vertex {} has degree {degree}", id(v)));
                    continue;
                }
                let w = u.edge(edges[0]).other(v);
                if !u.kind(w).is_l() {
                    report.push(ABadNeighbour, format!("A-vertex {} is adjacent to {}", id(v), id(w)));
                }
            }
            VertexKind::L => {
                if degree != 1 && degree != 2 {
                    report.push(LBadDegree, format!("L-vertex {} has degree {degree}", id(v)));
                } else if degree == 2 {
                    let entering = edges.iter().filter(|&&e| u.edge(e).head == v).count();
                    let exiting = edges.iter().filter(|&&e| u.edge(e).tail == v).count();
                    if entering > 0 && exiting > 0 {
                        report.push(
                            LMixedOrientation,
                            format!("L-vertex {} has one entering and one exiting edge", id(v)),
                        );
                    }
                }
            }
        }
    }

    check_tags(u, &mut report);

    let unreached = unreachable_vertices(u.vertex_count(), |v| {
        u.incident(v).iter().map(move |&e| u.edge(e).other(v))
    });
    if !unreached.is_empty() {
        let names: Vec<&str> = unreached.iter().map(|&v| id(v)).collect();
        report.push(
            Disconnected,
            format!("vertices {} unreachable from {}", names.join(","), id(0)),
        );
    }
    report
}

fn check_tags(u: &EquippedGraph, report: &mut ValidationReport) {
    use ViolationCode::*;
    let mut used: HashSet<(usize, Vec<usize>)> = HashSet::new();
    for (e, edge) in u.edges().iter().enumerate() {
        let m = u.m_end(e).filter(|&m| u.kind(edge.other(m)).is_l());
        let Some(m) = m else {
            if edge.cycle.is_some() {
                report.push(
                    UnexpectedCycleTag,
                    format!("edge {} is not an (M,L) or (L,M) edge", edge.id),
                );
            }
            continue;
        };
        let Some(cycle) = &edge.cycle else {
            report.push(MissingCycleTag, format!("edge {} has no cycle tag", edge.id));
            continue;
        };
        let expected = if edge.tail == m { CycleKind::Tu } else { CycleKind::St };
        if cycle.kind() != expected {
            report.push(
                WrongCycleKind,
                format!(
                    "edge {} carries a {} cycle, expected {}",
                    edge.id,
                    cycle.kind(),
                    expected
                ),
            );
            continue;
        }
        let g = u.kind(m).four_colour().expect("m is an M-vertex");
        let Some(table) = NominalTable::build(g) else {
            continue;
        };
        let support = cycle.support();
        let is_component = cycle.is_closed_walk_in(g)
            && two_colour_cycles(g, &table, expected)
                .iter()
                .any(|c| c.support() == support);
        if !is_component {
            report.push(
                InvalidCycle,
                format!("tag of edge {} is not a {} cycle of its M-graph", edge.id, expected),
            );
            continue;
        }
        if !used.insert((m, support)) {
            report.push(
                DuplicateCycleTag,
                format!("cycle on edge {} is already tagged at {}", edge.id, u.vertex(m).id),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::equipped::Weight;
    use ViolationCode::*;

    fn set(codes: &[ViolationCode]) -> BTreeSet<ViolationCode> {
        codes.iter().copied().collect()
    }

    #[test]
    fn sphere4_is_admissible() {
        assert!(validate_four_colour(&fixtures::sphere4()).is_empty());
    }

    #[test]
    fn rewired_s_edges() {
        let g = fixtures::sphere4_rewired();
        assert_eq!(validate_four_colour(&g).code_set(), set(&[Disconnected, BadCStarOrbit]));
    }

    #[test]
    fn lonely_vertex() {
        let mut g = FourColourGraph::new("one");
        g.add_vertex("1").unwrap();
        let r = validate_four_colour(&g);
        assert_eq!(r.codes(), vec![MissingColourEdge; 3]);
        assert_eq!(validate_four_colour(&FourColourGraph::new("none")).codes(), vec![Empty]);
    }

    #[test]
    fn loops_and_bad_positions() {
        let mut g = fixtures::sphere4();
        let a = g.vertex("1").unwrap();
        let b = g.vertex("2").unwrap();
        g.add_c_edge("cx", a, 2, b, 1).unwrap();
        let r = validate_four_colour(&g);
        assert!(r.code_set().contains(&BadCOrder));
        let mut h = fixtures::sphere4();
        h.add_edge("sl", Colour::S, a, a).unwrap();
        let r = validate_four_colour(&h);
        assert!(r.code_set().contains(&LoopEdge));
        assert!(r.code_set().contains(&DuplicateColourEdge));
    }

    #[test]
    fn equipped_fixtures_are_admissible() {
        for u in fixtures::equipped_all() {
            assert!(
                validate_equipped(&u).is_empty(),
                "{}: {}",
                u.name(),
                validate_equipped(&u)
            );
        }
    }

    #[test]
    fn torus_with_e1_entered_twice() {
        let u = fixtures::torus_ll_e1_entered_twice();
        assert_eq!(
            validate_equipped(&u).code_set(),
            set(&[EBadOrientation, LMixedOrientation])
        );
    }

    #[test]
    fn proj_al_with_second_edge() {
        let mut u = fixtures::proj_al();
        let a = u.vertex_by_id("a1").unwrap();
        let l = u.vertex_by_id("l1").unwrap();
        u.add_edge("x2", a, l, None).unwrap();
        assert_eq!(validate_equipped(&u).code_set(), set(&[ABadDegree]));
    }

    #[test]
    fn tag_problems() {
        let mut u = fixtures::sphere_mla();
        let e = u.edge_by_id("x2").unwrap();
        let tag = u.edge(e).cycle.clone();
        u.set_cycle(e, None);
        assert_eq!(validate_equipped(&u).code_set(), set(&[MissingCycleTag]));

        let g = fixtures::sphere4();
        let st = crate::invariants::cycles::enumerate_st_cycles(&g).unwrap().remove(0);
        u.set_cycle(e, Some(st));
        assert_eq!(validate_equipped(&u).code_set(), set(&[WrongCycleKind]));

        u.set_cycle(e, tag.clone());
        let x1 = u.edge_by_id("x1").unwrap();
        u.set_cycle(x1, tag);
        assert_eq!(validate_equipped(&u).code_set(), set(&[UnexpectedCycleTag]));
    }

    #[test]
    fn duplicate_tags_and_e_rules() {
        let mut u = fixtures::sphere_mla();
        let m = u.vertex_by_id("m1").unwrap();
        let l2 = u.add_vertex("l2", VertexKind::L).unwrap();
        let a2 = u.add_vertex("a2", VertexKind::A).unwrap();
        let tag = u.edge(u.edge_by_id("x2").unwrap()).cycle.clone().unwrap();
        u.add_edge("x3", m, l2, Some(tag.reversed())).unwrap();
        u.add_edge("x4", a2, l2, None).unwrap();
        assert_eq!(validate_equipped(&u).code_set(), set(&[DuplicateCycleTag]));

        let mut t = fixtures::torus_ll();
        let e1 = t.vertex_by_id("e1").unwrap();
        t.set_kind(e1, VertexKind::E(Weight::Minus));
        assert!(validate_equipped(&t).is_empty());
        let l1 = t.vertex_by_id("l1").unwrap();
        t.add_edge("x9", l1, e1, None).unwrap();
        assert!(validate_equipped(&t).code_set().contains(&EBadDegree));
    }
}
