//! Four-colour multigraphs.
//!
//! A vertex is a polygonal region of a flow without limit cycles; an edge is a
//! boundary curve shared by two regions, coloured by the kind of curve. Every
//! vertex owns exactly one s-, t- and u-edge and an ordered list of c-edges.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    S,
    T,
    U,
    C,
}

impl Colour {
    pub const ALL: [Colour; 4] = [Colour::S, Colour::T, Colour::U, Colour::C];

    pub fn as_str(self) -> &'static str {
        match self {
            Colour::S => "s",
            Colour::T => "t",
            Colour::U => "u",
            Colour::C => "c",
        }
    }

    pub fn parse(token: &str) -> Option<Colour> {
        match token {
            "s" => Some(Colour::S),
            "t" => Some(Colour::T),
            "u" => Some(Colour::U),
            "c" => Some(Colour::C),
            _ => None,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub colour: Colour,
    pub ends: [usize; 2],
    /// c-order positions (1-based) at `ends[0]` and `ends[1]`; `None` unless
    /// the edge is a c-edge.
    pub positions: Option<[u32; 2]>,
}

impl Edge {
    /// The endpoint opposite `v`. For a loop this is `v` itself.
    pub fn other(&self, v: usize) -> usize {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    /// c-order position of this edge at endpoint `v`.
    pub fn position_at(&self, v: usize) -> Option<u32> {
        let p = self.positions?;
        if self.ends[0] == v {
            Some(p[0])
        } else if self.ends[1] == v {
            Some(p[1])
        } else {
            None
        }
    }
}

/// A four-colour multigraph. Vertices and edges are addressed by dense
/// indices in declaration order; the textual ids are kept for I/O.
///
/// Construction only checks referential integrity. Colour counts, loops,
/// c-orders, connectivity and corner orbits are checked by
/// [`validate_four_colour`](crate::validate_four_colour).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourColourGraph {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

impl FourColourGraph {
    pub fn new(name: impl Into<String>) -> Self {
        FourColourGraph {
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

    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if self.vertex_index.contains_key(&id) {
            return Err(Error::DuplicateId(id));
        }
        let v = self.vertices.len();
        self.vertex_index.insert(id.clone(), v);
        self.vertices.push(id);
        self.incidence.push(Vec::new());
        Ok(v)
    }

    /// Adds an s-, t- or u-edge between two vertex indices.
    pub fn add_edge(&mut self, id: impl Into<String>, colour: Colour, a: usize, b: usize) -> Result<usize> {
        if colour == Colour::C {
            return Err(Error::InvalidArgument("c-edges need positions; use add_c_edge".into()));
        }
        self.push_edge(Edge {
            id: id.into(),
            colour,
            ends: [a, b],
            positions: None,
        })
    }

    /// Adds a c-edge with its c-order position at each endpoint.
    pub fn add_c_edge(&mut self, id: impl Into<String>, a: usize, pos_a: u32, b: usize, pos_b: u32) -> Result<usize> {
        self.push_edge(Edge {
            id: id.into(),
            colour: Colour::C,
            ends: [a, b],
            positions: Some([pos_a, pos_b]),
        })
    }

    fn push_edge(&mut self, edge: Edge) -> Result<usize> {
        for &v in &edge.ends {
            if v >= self.vertices.len() {
                return Err(Error::NoSuchVertex(format!("#{v}")));
            }
        }
        if self.edge_index.contains_key(&edge.id) {
            return Err(Error::DuplicateId(edge.id));
        }
        let e = self.edges.len();
        self.edge_index.insert(edge.id.clone(), e);
        self.incidence[edge.ends[0]].push(e);
        if !edge.is_loop() {
            self.incidence[edge.ends[1]].push(e);
        }
        self.edges.push(edge);
        Ok(e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edge indices incident to `v` (each loop listed once).
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Number of c-edges at `v`, written n_v.
    pub fn c_degree(&self, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .filter(|&&e| self.edges[e].colour == Colour::C)
            .count()
    }

    /// The c-edges at `v` sorted by their position there. Only a permutation
    /// of 1..=n_v when the graph is well-formed.
    pub fn c_order(&self, v: usize) -> Vec<usize> {
        let mut cs: Vec<(u32, usize)> = self.incidence[v]
            .iter()
            .filter_map(|&e| self.edges[e].position_at(v).map(|p| (p, e)))
            .collect();
        cs.sort_unstable();
        cs.into_iter().map(|(_, e)| e).collect()
    }

    /// The unique edge of `colour` at `v`, if there is exactly one.
    pub fn colour_edge(&self, v: usize, colour: Colour) -> Option<usize> {
        let mut found = None;
        for &e in &self.incidence[v] {
            if self.edges[e].colour == colour {
                if found.is_some() {
                    return None;
                }
                found = Some(e);
            }
        }
        found
    }

    /// Nominal index of edge `e` at vertex `v`: 0 for the u-edge, `n_v + 1`
    /// for the s-edge, the c-order position for a c-edge.
    pub fn nominal_index(&self, v: usize, e: usize) -> Result<u32> {
        let edge = &self.edges[e];
        if !edge.ends.contains(&v) {
            return Err(Error::NotIncident {
                vertex: self.vertices[v].clone(),
                edge: edge.id.clone(),
            });
        }
        match edge.colour {
            Colour::U => Ok(0),
            Colour::S => Ok(self.c_degree(v) as u32 + 1),
            Colour::C => Ok(edge.position_at(v).expect("c-edge has positions")),
            Colour::T => Err(Error::TEdgeHasNoIndex(edge.id.clone())),
        }
    }

    /// Sum over vertices of `n_v + 1`, the number of saddle corners.
    pub fn corner_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.c_degree(v) + 1).sum()
    }
}

/// Name-based convenience wrapper around [`FourColourGraph::nominal_index`].
pub fn nominal_index(g: &FourColourGraph, vertex: &str, edge: &str) -> Result<u32> {
    let v = g.vertex(vertex).ok_or_else(|| Error::NoSuchVertex(vertex.into()))?;
    let e = g.edge_by_id(edge).ok_or_else(|| Error::NoSuchEdge(edge.into()))?;
    g.nominal_index(v, e)
}

/// Per-vertex lookup from nominal index to edge, plus the t-edge. Only
/// exists for well-formed graphs.
#[derive(Debug, Clone)]
pub(crate) struct NominalTable {
    pub slots: Vec<Vec<usize>>,
    pub t_edge: Vec<usize>,
}

impl NominalTable {
    /// Builds the table, or `None` if some vertex lacks the required local
    /// structure.
    pub fn build(g: &FourColourGraph) -> Option<NominalTable> {
        let n = g.vertex_count();
        let mut slots = Vec::with_capacity(n);
        let mut t_edge = Vec::with_capacity(n);
        for v in 0..n {
            let nv = g.c_degree(v);
            let mut row = vec![usize::MAX; nv + 2];
            let mut t = None;
            for &e in g.incident(v) {
                let edge = g.edge(e);
                if edge.is_loop() {
                    return None;
                }
                let idx = match edge.colour {
                    Colour::T => {
                        if t.replace(e).is_some() {
                            return None;
                        }
                        continue;
                    }
                    Colour::U => 0,
                    Colour::S => nv + 1,
                    Colour::C => edge.position_at(v)? as usize,
                };
                if idx >= row.len() || row[idx] != usize::MAX {
                    return None;
                }
                if edge.colour == Colour::C && idx == 0 {
                    return None;
                }
                row[idx] = e;
            }
            if row.contains(&usize::MAX) {
                return None;
            }
            slots.push(row);
            t_edge.push(t?);
        }
        Some(NominalTable { slots, t_edge })
    }

    pub fn n(&self, v: usize) -> u32 {
        self.slots[v].len() as u32 - 2
    }

    pub fn at(&self, v: usize, index: u32) -> usize {
        self.slots[v][index as usize]
    }
}
