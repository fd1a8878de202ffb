//! tu-, st- and c*-cycles of a four-colour graph.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::four_colour::NominalTable;
use crate::model::{
    require_admissible, require_well_formed, Colour, Corner, CycleKind, Dart, FourColourGraph, OrientedCycle,
};

/// Which side of a corner a c*-walk leaves by: `Upper` through the edge of
/// index `low_index + 1`, `Lower` through the edge of index `low_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exit {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCensus {
    pub nu0: usize,
    pub nu1: usize,
    pub nu2: usize,
    pub tu: Vec<OrientedCycle>,
    pub cstar: Vec<OrientedCycle>,
    pub st: Vec<OrientedCycle>,
}

impl CycleCensus {
    pub fn euler(&self) -> i64 {
        self.nu0 as i64 - self.nu1 as i64 + self.nu2 as i64
    }
}

fn index_at(g: &FourColourGraph, table: &NominalTable, v: usize, e: usize) -> u32 {
    let edge = g.edge(e);
    match edge.colour {
        Colour::U => 0,
        Colour::S => table.n(v) + 1,
        Colour::C => edge.position_at(v).expect("c-edge at its endpoint"),
        Colour::T => unreachable!("t-edges are not part of corners"),
    }
}

pub(crate) fn step(g: &FourColourGraph, table: &NominalTable, c: Corner, exit: Exit) -> (Corner, Exit) {
    match exit {
        Exit::Upper => {
            let e = table.at(c.vertex, c.low_index + 1);
            let w = g.edge(e).other(c.vertex);
            let l = index_at(g, table, w, e);
            (Corner::new(w, l - 1), Exit::Lower)
        }
        Exit::Lower => {
            let e = table.at(c.vertex, c.low_index);
            let w = g.edge(e).other(c.vertex);
            let m = index_at(g, table, w, e);
            (Corner::new(w, m), Exit::Upper)
        }
    }
}

fn exit_edge(table: &NominalTable, c: Corner, exit: Exit) -> usize {
    match exit {
        Exit::Upper => table.at(c.vertex, c.low_index + 1),
        Exit::Lower => table.at(c.vertex, c.low_index),
    }
}

/// One step of a c*-walk. From corner (j, j+1) at b leaving by `Upper`, the
/// walk crosses the edge of index j+1 to b', where that edge has index l, and
/// arrives at corner (l-1, l) to leave next by `Lower`; a `Lower` step
/// crosses edge j and arrives at (m, m+1) to leave by `Upper`.
///
/// The map is a bijection on (corner, exit) pairs.
pub fn corner_successor(g: &FourColourGraph, c: Corner, exit: Exit) -> Result<(Corner, Exit)> {
    let table = require_well_formed(g)?;
    check_corner(g, &table, c)?;
    Ok(step(g, &table, c, exit))
}

fn check_corner(g: &FourColourGraph, table: &NominalTable, c: Corner) -> Result<()> {
    if c.vertex >= g.vertex_count() || c.low_index > table.n(c.vertex) {
        return Err(Error::InvalidCorner {
            vertex: if c.vertex < g.vertex_count() {
                g.vertex_id(c.vertex).to_string()
            } else {
                format!("#{}", c.vertex)
            },
            low_index: c.low_index,
        });
    }
    Ok(())
}

/// The corners met by the c*-walk starting at `c` and leaving by `Upper`.
pub fn corner_orbit(g: &FourColourGraph, c: Corner) -> Result<Vec<Corner>> {
    let table = require_well_formed(g)?;
    check_corner(g, &table, c)?;
    Ok(trace(g, &table, c, Exit::Upper).into_iter().map(|(c, _)| c).collect())
}

fn trace(g: &FourColourGraph, table: &NominalTable, c: Corner, exit: Exit) -> Vec<(Corner, Exit)> {
    let mut orbit = vec![(c, exit)];
    let mut state = step(g, table, c, exit);
    while state != (c, exit) {
        orbit.push(state);
        state = step(g, table, state.0, state.1);
    }
    orbit
}

/// Partitions all corners into walks, each started at its smallest corner
/// leaving by `Upper`. Requires only local well-formedness.
pub(crate) fn corner_orbits(g: &FourColourGraph, table: &NominalTable) -> Vec<Vec<(Corner, Exit)>> {
    let mut seen: Vec<Vec<bool>> = (0..g.vertex_count())
        .map(|v| vec![false; table.n(v) as usize + 1])
        .collect();
    let mut orbits = Vec::new();
    for v in 0..g.vertex_count() {
        for j in 0..=table.n(v) {
            if seen[v][j as usize] {
                continue;
            }
            let orbit = trace(g, table, Corner::new(v, j), Exit::Upper);
            for (c, _) in &orbit {
                seen[c.vertex][c.low_index as usize] = true;
            }
            orbits.push(orbit);
        }
    }
    orbits
}

fn orbit_cycle(table: &NominalTable, orbit: &[(Corner, Exit)]) -> OrientedCycle {
    let darts = orbit
        .iter()
        .map(|&(c, x)| Dart::new(c.vertex, exit_edge(table, c, x)))
        .collect();
    OrientedCycle::new(CycleKind::CStar, darts)
}

/// Components of the t∪u (or t∪s) subgraph, each started at its smallest
/// vertex and first traversed along the t-edge.
pub(crate) fn two_colour_cycles(g: &FourColourGraph, table: &NominalTable, kind: CycleKind) -> Vec<OrientedCycle> {
    let other = |v: usize| match kind {
        CycleKind::Tu => table.at(v, 0),
        CycleKind::St => table.at(v, table.n(v) + 1),
        CycleKind::CStar => unreachable!("c*-cycles are not two-coloured"),
    };
    let mut seen = vec![false; g.vertex_count()];
    let mut cycles = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut v = start;
        loop {
            seen[v] = true;
            let t = table.t_edge[v];
            darts.push(Dart::new(v, t));
            let w = g.edge(t).other(v);
            seen[w] = true;
            let o = other(w);
            darts.push(Dart::new(w, o));
            v = g.edge(o).other(w);
            if v == start {
                break;
            }
        }
        cycles.push(OrientedCycle::new(kind, darts));
    }
    cycles
}

pub fn enumerate_tu_cycles(g: &FourColourGraph) -> Result<Vec<OrientedCycle>> {
    let table = require_admissible(g)?;
    Ok(two_colour_cycles(g, &table, CycleKind::Tu))
}

pub fn enumerate_st_cycles(g: &FourColourGraph) -> Result<Vec<OrientedCycle>> {
    let table = require_admissible(g)?;
    Ok(two_colour_cycles(g, &table, CycleKind::St))
}

/// c*-cycles by corner-orbit tracing.
pub fn enumerate_cstar_cycles(g: &FourColourGraph) -> Result<Vec<OrientedCycle>> {
    let table = require_admissible(g)?;
    Ok(cstar_unchecked(g, &table))
}

pub(crate) fn cstar_unchecked(g: &FourColourGraph, table: &NominalTable) -> Vec<OrientedCycle> {
    corner_orbits(g, table).iter().map(|o| orbit_cycle(table, o)).collect()
}

/// c*-cycles by the edge-deletion search: visit the non-t edges in order,
/// collect the (at most two) c*-cycles through the current edge that avoid
/// every deleted edge, then delete it. Each cycle is reported as the walk
/// from its smallest corner leaving by `Upper`, so the result can be
/// compared with [`enumerate_cstar_cycles`] after sorting.
pub fn cstar_cycles_by_edge_search(g: &FourColourGraph) -> Result<Vec<OrientedCycle>> {
    let table = require_admissible(g)?;
    Ok(cstar_by_edge_search_unchecked(g, &table))
}

pub(crate) fn cstar_by_edge_search_unchecked(g: &FourColourGraph, table: &NominalTable) -> Vec<OrientedCycle> {
    let mut deleted = vec![false; g.edge_count()];
    let mut found = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if edge.colour == Colour::T {
            continue;
        }
        let v = edge.ends[0];
        let idx = index_at(g, table, v, e);
        let mut starts = Vec::with_capacity(2);
        if idx >= 1 {
            starts.push((Corner::new(v, idx - 1), Exit::Upper));
        }
        if idx <= table.n(v) {
            starts.push((Corner::new(v, idx), Exit::Lower));
        }
        for (c, x) in starts {
            let walk = trace(g, table, c, x);
            if walk.iter().any(|&(c, x)| deleted[exit_edge(table, c, x)]) {
                continue;
            }
            let start = walk.iter().map(|&(c, _)| c).min().expect("walks are nonempty");
            found.push(orbit_cycle(table, &trace(g, table, start, Exit::Upper)));
        }
        deleted[e] = true;
    }
    found
}

pub fn census(g: &FourColourGraph) -> Result<CycleCensus> {
    let table = require_admissible(g)?;
    Ok(census_unchecked(g, &table))
}

pub(crate) fn census_unchecked(g: &FourColourGraph, table: &NominalTable) -> CycleCensus {
    let tu = two_colour_cycles(g, table, CycleKind::Tu);
    let st = two_colour_cycles(g, table, CycleKind::St);
    let cstar = cstar_unchecked(g, table);
    CycleCensus {
        nu0: tu.len(),
        nu1: cstar.len(),
        nu2: st.len(),
        tu,
        cstar,
        st,
    }
}

/// Number of c*-cycles via the edge-deletion search, for timing comparisons.
pub fn count_cstar_by_edge_search(g: &FourColourGraph) -> Result<usize> {
    cstar_cycles_by_edge_search(g).map(|v| v.len())
}

/// Set of corners per c*-cycle; an orientation-free view for comparisons.
pub fn cstar_corner_sets(g: &FourColourGraph) -> Result<BTreeSet<Vec<Corner>>> {
    let table = require_admissible(g)?;
    Ok(corner_orbits(g, &table)
        .into_iter()
        .map(|o| {
            let mut cs: Vec<Corner> = o.into_iter().map(|(c, _)| c).collect();
            cs.sort_unstable();
            cs
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ids(g: &FourColourGraph, c: &OrientedCycle) -> String {
        c.format(g)
    }

    #[test]
    fn sphere4_tu_and_st() {
        let g = fixtures::sphere4();
        let tu: Vec<String> = enumerate_tu_cycles(&g).unwrap().iter().map(|c| ids(&g, c)).collect();
        assert_eq!(tu, ["1 t12 2 u12", "3 t34 4 u34"]);
        let st: Vec<String> = enumerate_st_cycles(&g).unwrap().iter().map(|c| ids(&g, c)).collect();
        assert_eq!(st, ["1 t12 2 s24 4 t34 3 s13"]);
    }

    #[test]
    fn sphere4_corner_walk() {
        let g = fixtures::sphere4();
        let v = |s: &str| g.vertex(s).unwrap();
        let (next, exit) = corner_successor(&g, Corner::new(v("1"), 0), Exit::Upper).unwrap();
        assert_eq!((next, exit), (Corner::new(v("3"), 0), Exit::Lower));
        let orbit = corner_orbit(&g, Corner::new(v("1"), 0)).unwrap();
        let visited: Vec<&str> = orbit.iter().map(|c| g.vertex_id(c.vertex)).collect();
        assert_eq!(visited, ["1", "3", "4", "2"]);
        assert!(matches!(
            corner_successor(&g, Corner::new(v("1"), 1), Exit::Upper),
            Err(Error::InvalidCorner { .. })
        ));
    }

    #[test]
    fn sphere4_cstar() {
        let g = fixtures::sphere4();
        let cs = enumerate_cstar_cycles(&g).unwrap();
        assert_eq!(cs.len(), 1);
        let mut names: Vec<&str> = cs[0].edges().map(|e| g.edge(e).id.as_str()).collect();
        names.sort_unstable();
        assert_eq!(names, ["s13", "s24", "u12", "u34"]);
        assert_eq!(cstar_cycles_by_edge_search(&g).unwrap(), cs);
    }

    #[test]
    fn census_of_sphere4() {
        let c = census(&fixtures::sphere4()).unwrap();
        assert_eq!((c.nu0, c.nu1, c.nu2), (2, 1, 1));
        assert_eq!(c.euler(), 2);
    }

    #[test]
    fn rewired_is_rejected() {
        let g = fixtures::sphere4_rewired();
        assert!(matches!(enumerate_cstar_cycles(&g), Err(Error::NotAdmissible(_))));
        assert!(matches!(enumerate_tu_cycles(&g), Err(Error::NotAdmissible(_))));
        // the local structure is fine, so single steps still work
        let (c, _) = corner_successor(&g, Corner::new(0, 0), Exit::Upper).unwrap();
        assert_eq!(g.vertex_id(c.vertex), "2");
    }
}
