//! Helpers shared by the integration tests: graph mutations and a bridge to
//! petgraph.
#![allow(dead_code)]

use flowgraph::iso::SimpleGraph;
use flowgraph::model::{Colour, EquippedGraph, FourColourGraph, VertexKind};
use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Copy of `g` with colours `a` and `b` exchanged on every edge.
pub fn swap_colours(g: &FourColourGraph, a: Colour, b: Colour) -> FourColourGraph {
    let mut h = FourColourGraph::new(g.name());
    for id in g.vertex_ids() {
        h.add_vertex(id.clone()).unwrap();
    }
    for e in g.edges() {
        let [x, y] = e.ends;
        match e.positions {
            Some([p, q]) => h.add_c_edge(e.id.clone(), x, p, y, q).unwrap(),
            None => {
                let c = if e.colour == a {
                    b
                } else if e.colour == b {
                    a
                } else {
                    e.colour
                };
                h.add_edge(e.id.clone(), c, x, y).unwrap()
            }
        };
    }
    h
}

/// Copy of `g` with the c-order at one vertex permuted by a non-identity
/// permutation. `None` when no vertex has two c-edges.
pub fn shuffle_c_order(g: &FourColourGraph, rng: &mut impl Rng) -> Option<FourColourGraph> {
    let candidates: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.c_degree(v) >= 2).collect();
    let &v = candidates.choose(rng)?;
    let n = g.c_degree(v) as u32;
    let mut perm: Vec<u32> = (1..=n).collect();
    while perm.iter().enumerate().all(|(i, &p)| p == i as u32 + 1) {
        perm.shuffle(rng);
    }
    let mut h = FourColourGraph::new(g.name());
    for id in g.vertex_ids() {
        h.add_vertex(id.clone()).unwrap();
    }
    for e in g.edges() {
        let [x, y] = e.ends;
        match e.positions {
            Some([p, q]) => {
                let p = if x == v { perm[p as usize - 1] } else { p };
                let q = if y == v { perm[q as usize - 1] } else { q };
                h.add_c_edge(e.id.clone(), x, p, y, q).unwrap()
            }
            None => h.add_edge(e.id.clone(), e.colour, x, y).unwrap(),
        };
    }
    Some(h)
}

/// Copy of `u` with the tag on edge `e` traversed backwards.
pub fn reverse_tag(u: &EquippedGraph, e: usize) -> EquippedGraph {
    let mut r = u.clone();
    let c = u.edge(e).cycle.as_ref().map(|c| c.reversed());
    r.set_cycle(e, c);
    r
}

/// Edges carrying a cycle tag.
pub fn tagged_edges(u: &EquippedGraph) -> Vec<usize> {
    (0..u.edge_count()).filter(|&e| u.edge(e).cycle.is_some()).collect()
}

/// Copy of `u` with the weight of E-vertex `v` flipped.
pub fn flip_weight(u: &EquippedGraph, v: usize) -> EquippedGraph {
    let mut r = u.clone();
    if let VertexKind::E(w) = u.kind(v) {
        r.set_kind(v, VertexKind::E(w.flipped()));
    }
    r
}

pub fn e_vertices(u: &EquippedGraph) -> Vec<usize> {
    (0..u.vertex_count())
        .filter(|&v| matches!(u.kind(v), VertexKind::E(_)))
        .collect()
}

pub fn to_petgraph(sg: &SimpleGraph) -> UnGraph<(), ()> {
    let mut g = UnGraph::new_undirected();
    let nodes: Vec<_> = (0..sg.vertex_count()).map(|_| g.add_node(())).collect();
    for (a, b) in sg.edges() {
        g.add_edge(nodes[a], nodes[b], ());
    }
    g
}

/// Median of a sample of durations in seconds.
pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs[xs.len() / 2]
}
