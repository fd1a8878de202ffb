//! Equipped graphs: the directed adjacency graph of the elementary regions of
//! a flow, decorated with E-weights, per-M four-colour graphs and oriented
//! cycle tags.

use std::collections::HashMap;
use std::fmt;

use super::cycle::OrientedCycle;
use super::four_colour::FourColourGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Plus,
    Minus,
}

impl Weight {
    pub fn flipped(self) -> Weight {
        match self {
            Weight::Plus => Weight::Minus,
            Weight::Minus => Weight::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexKind {
    A,
    E(Weight),
    L,
    M(FourColourGraph),
}

impl VertexKind {
    pub fn is_m(&self) -> bool {
        matches!(self, VertexKind::M(_))
    }

    pub fn is_l(&self) -> bool {
        matches!(self, VertexKind::L)
    }

    pub fn four_colour(&self) -> Option<&FourColourGraph> {
        match self {
            VertexKind::M(g) => Some(g),
            _ => None,
        }
    }

    /// Kind token as written in files, e.g. `E+` or `M:SPHERE4`.
    pub fn token(&self) -> String {
        match self {
            VertexKind::A => "A".into(),
            VertexKind::E(Weight::Plus) => "E+".into(),
            VertexKind::E(Weight::Minus) => "E-".into(),
            VertexKind::L => "L".into(),
            VertexKind::M(g) => format!("M:{}", g.name()),
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqVertex {
    pub id: String,
    pub kind: VertexKind,
}

/// A directed edge. `cycle` is a cycle of the four-colour graph of whichever
/// endpoint is an M-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqEdge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
    pub cycle: Option<OrientedCycle>,
}

impl EqEdge {
    pub fn other(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquippedGraph {
    name: String,
    vertices: Vec<EqVertex>,
    edges: Vec<EqEdge>,
    incidence: Vec<Vec<usize>>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

impl EquippedGraph {
    pub fn new(name: impl Into<String>) -> Self {
        EquippedGraph {
            name: name.into(),
            vertices: Vec::new(),
            edges: Vec::new(),
            incidence: Vec::new(),
            vertex_index: HashMap::new(),
            edge_index: HashMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, kind: VertexKind) -> Result<usize> {
        let id = id.into();
        if self.vertex_index.contains_key(&id) {
            return Err(Error::DuplicateId(id));
        }
        let v = self.vertices.len();
        self.vertex_index.insert(id.clone(), v);
        self.vertices.push(EqVertex { id, kind });
        self.incidence.push(Vec::new());
        Ok(v)
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<String>,
        tail: usize,
        head: usize,
        cycle: Option<OrientedCycle>,
    ) -> Result<usize> {
        let id = id.into();
        for v in [tail, head] {
            if v >= self.vertices.len() {
                return Err(Error::NoSuchVertex(format!("#{v}")));
            }
        }
        if self.edge_index.contains_key(&id) {
            return Err(Error::DuplicateId(id));
        }
        let e = self.edges.len();
        self.edge_index.insert(id.clone(), e);
        self.incidence[tail].push(e);
        if head != tail {
            self.incidence[head].push(e);
        }
        self.edges.push(EqEdge { id, tail, head, cycle });
        Ok(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, v: usize) -> &EqVertex {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[EqVertex] {
        &self.vertices
    }

    pub fn vertex_by_id(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge(&self, e: usize) -> &EqEdge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[EqEdge] {
        &self.edges
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .map(|&e| if self.edges[e].tail == self.edges[e].head { 2 } else { 1 })
            .sum()
    }

    pub fn kind(&self, v: usize) -> &VertexKind {
        &self.vertices[v].kind
    }

    /// Replaces the tag of edge `e`.
    pub fn set_cycle(&mut self, e: usize, cycle: Option<OrientedCycle>) {
        self.edges[e].cycle = cycle;
    }

    /// Replaces the kind of vertex `v`, e.g. to flip an E-weight.
    pub fn set_kind(&mut self, v: usize, kind: VertexKind) {
        self.vertices[v].kind = kind;
    }

    /// The M endpoint of edge `e` if exactly one end is an M-vertex.
    pub fn m_end(&self, e: usize) -> Option<usize> {
        let edge = &self.edges[e];
        match (self.kind(edge.tail).is_m(), self.kind(edge.head).is_m()) {
            (true, false) => Some(edge.tail),
            (false, true) => Some(edge.head),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn torus_ll_shape() {
        let u = fixtures::torus_ll();
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edge_count(), 4);
        let l1 = u.vertex_by_id("l1").unwrap();
        assert_eq!(u.degree(l1), 2);
        assert_eq!(u.kind(u.vertex_by_id("e1").unwrap()), &VertexKind::E(Weight::Plus));
    }

    #[test]
    fn m_end_finds_the_region_graph_side() {
        let u = fixtures::sphere_mla();
        let e = u.edge_by_id("x2").unwrap();
        assert_eq!(u.m_end(e), u.vertex_by_id("m1"));
        assert_eq!(u.m_end(u.edge_by_id("x1").unwrap()), None);
        assert_eq!(VertexKind::E(Weight::Minus).token(), "E-");
        assert_eq!(u.kind(u.vertex_by_id("m1").unwrap()).token(), "M:SPHERE4");
    }
}
