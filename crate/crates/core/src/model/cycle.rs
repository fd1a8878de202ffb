use std::fmt;

use super::four_colour::{Colour, FourColourGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleKind {
    Tu,
    St,
    CStar,
}

impl CycleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleKind::Tu => "tu",
            CycleKind::St => "st",
            CycleKind::CStar => "cstar",
        }
    }
}

impl fmt::Display for CycleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A vertex together with the edge by which a traversal leaves it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub vertex: usize,
    pub edge: usize,
}

impl Dart {
    pub fn new(vertex: usize, edge: usize) -> Self {
        Dart { vertex, edge }
    }
}

/// A closed walk with a direction, stored as its darts.
///
/// The dart list is rotated so that it starts at its smallest dart, which
/// makes the derived equality "equal up to cyclic rotation". The reversed
/// walk is a different value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedCycle {
    kind: CycleKind,
    darts: Vec<Dart>,
}

impl OrientedCycle {
    pub fn new(kind: CycleKind, mut darts: Vec<Dart>) -> Self {
        if let Some(start) = (0..darts.len()).min_by_key(|&i| darts[i]) {
            darts.rotate_left(start);
        }
        OrientedCycle { kind, darts }
    }

    /// Builds a cycle from vertex/edge ids of `g`, inferring the kind from
    /// the edge colours.
    pub fn from_ids(g: &FourColourGraph, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut darts = Vec::with_capacity(pairs.len());
        for &(v, e) in pairs {
            let vi = g.vertex(v).ok_or_else(|| Error::NoSuchVertex(v.into()))?;
            let ei = g.edge_by_id(e).ok_or_else(|| Error::NoSuchEdge(e.into()))?;
            darts.push(Dart::new(vi, ei));
        }
        let kind = infer_kind(g, &darts);
        Ok(OrientedCycle::new(kind, darts))
    }

    pub fn kind(&self) -> CycleKind {
        self.kind
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.vertex)
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d.edge)
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> Self {
        let k = self.darts.len();
        let darts = (0..k)
            .map(|i| {
                let from = self.darts[(k - i) % k].vertex;
                let via = self.darts[(2 * k - i - 1) % k].edge;
                Dart::new(from, via)
            })
            .collect();
        OrientedCycle::new(self.kind, darts)
    }

    /// Orientation-free identity: the sorted edge list.
    pub fn support(&self) -> Vec<usize> {
        let mut es: Vec<usize> = self.edges().collect();
        es.sort_unstable();
        es
    }

    /// Checks that consecutive darts are incident and chain together in `g`.
    pub fn is_closed_walk_in(&self, g: &FourColourGraph) -> bool {
        let k = self.darts.len();
        if k == 0 {
            return false;
        }
        for i in 0..k {
            let d = self.darts[i];
            if d.vertex >= g.vertex_count() || d.edge >= g.edge_count() {
                return false;
            }
            let e = g.edge(d.edge);
            if !e.ends.contains(&d.vertex) || e.other(d.vertex) != self.darts[(i + 1) % k].vertex {
                return false;
            }
        }
        true
    }

    /// Applies a vertex map and an edge map, e.g. one induced by an
    /// isomorphism.
    pub fn map(&self, vertex: impl Fn(usize) -> usize, edge: impl Fn(usize) -> usize) -> Self {
        let darts = self
            .darts
            .iter()
            .map(|d| Dart::new(vertex(d.vertex), edge(d.edge)))
            .collect();
        OrientedCycle::new(self.kind, darts)
    }

    /// `v0 e0 v1 e1 ...` using the ids of `g`.
    pub fn format(&self, g: &FourColourGraph) -> String {
        let mut parts = Vec::with_capacity(2 * self.darts.len());
        for d in &self.darts {
            parts.push(g.vertex_id(d.vertex).to_string());
            parts.push(g.edge(d.edge).id.clone());
        }
        parts.join(" ")
    }
}

fn infer_kind(g: &FourColourGraph, darts: &[Dart]) -> CycleKind {
    let colours = |allowed: [Colour; 2]| {
        darts
            .iter()
            .all(|d| d.edge < g.edge_count() && allowed.contains(&g.edge(d.edge).colour))
    };
    if !darts.is_empty() && colours([Colour::T, Colour::U]) {
        CycleKind::Tu
    } else if !darts.is_empty() && colours([Colour::S, Colour::T]) {
        CycleKind::St
    } else {
        CycleKind::CStar
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rotation_is_equality_reversal_is_not() {
        let a = OrientedCycle::new(CycleKind::Tu, vec![Dart::new(2, 0), Dart::new(3, 1)]);
        let b = OrientedCycle::new(CycleKind::Tu, vec![Dart::new(3, 1), Dart::new(2, 0)]);
        assert_eq!(a, b);
        let r = a.reversed();
        assert_ne!(a, r);
        assert_eq!(r.darts(), &[Dart::new(2, 1), Dart::new(3, 0)]);
        assert_eq!(r.reversed(), a);
    }

    #[test]
    fn kind_is_inferred_from_colours() {
        let g = fixtures::sphere4();
        let tu = OrientedCycle::from_ids(&g, &[("3", "t34"), ("4", "u34")]).unwrap();
        assert_eq!(tu.kind(), CycleKind::Tu);
        assert!(tu.is_closed_walk_in(&g));
        let st = OrientedCycle::from_ids(&g, &[("1", "t12"), ("2", "s24"), ("4", "t34"), ("3", "s13")]).unwrap();
        assert_eq!(st.kind(), CycleKind::St);
        assert_eq!(st.format(&g), "1 t12 2 s24 4 t34 3 s13");
        let bad = OrientedCycle::from_ids(&g, &[("1", "t12"), ("3", "u34")]).unwrap();
        assert!(!bad.is_closed_walk_in(&g));
    }
}
