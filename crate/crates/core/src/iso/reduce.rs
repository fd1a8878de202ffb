//! Γ*_M: the four-colour graph encoded as a simple graph, and its inverse.
//!
//! Original vertices keep indices `0..n`. An s-, t- or u-edge becomes a path
//! with 1, 2 or 3 inner vertices; a c-edge at positions (p, q) becomes a
//! (p+5, q+5) triangle gadget, the p-side attached to its first endpoint.

use crate::error::{Error, Result};
use crate::iso::simple::{Multigraph, SimpleGraph};
use crate::model::{require_well_formed, Colour, FourColourGraph};

pub(crate) fn colour_length(c: Colour) -> usize {
    match c {
        Colour::S => 1,
        Colour::T => 2,
        Colour::U => 3,
        Colour::C => unreachable!("c-edges use the triangle gadget"),
    }
}

pub(crate) const C_OFFSET: usize = 5;

/// Appends the Γ*_M gadget for edge `e` of `g`, whose endpoints sit at
/// `at[..]` in `m`.
pub(crate) fn push_plain_gadget(
    m: &mut Multigraph,
    g: &FourColourGraph,
    e: usize,
    at: impl Fn(usize) -> usize,
) -> Result<()> {
    let edge = g.edge(e);
    let i = m.add_edge(at(edge.ends[0]), at(edge.ends[1]));
    match edge.positions {
        Some([p, q]) => m.k1k2_subdivide(i, p as usize + C_OFFSET, q as usize + C_OFFSET),
        None => m.k_subdivide(i, colour_length(edge.colour)),
    }
}

pub fn to_simple_four_colour(g: &FourColourGraph) -> Result<SimpleGraph> {
    require_well_formed(g)?;
    let mut m = Multigraph::new(g.vertex_count());
    for e in 0..g.edge_count() {
        push_plain_gadget(&mut m, g, e, |v| v)?;
    }
    let sg = m.to_simple()?;
    debug_assert!(sg.vertex_count() <= size_bound(g));
    Ok(sg)
}

/// (2n + 18) · m.
pub fn size_bound(g: &FourColourGraph) -> usize {
    (2 * g.vertex_count() + 18) * g.edge_count()
}

/// Vertices of degree at least 3 that lie on no triangle.
pub(crate) fn anchors(sg: &SimpleGraph) -> Vec<bool> {
    (0..sg.vertex_count())
        .map(|v| sg.degree(v) >= 3 && !sg.in_triangle(v))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Shape {
    /// A path with this many inner vertices.
    Path(usize),
    /// A triangle gadget with the given stub lengths at `ends[0]` and
    /// `ends[1]`.
    Triangle(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Gadget {
    pub ends: [usize; 2],
    pub shape: Shape,
}

fn not_in_image(msg: impl Into<String>) -> Error {
    Error::NotInImage(msg.into())
}

/// Splits everything that is neither an anchor nor skipped into gadgets
/// hanging between two distinct anchors.
pub(crate) fn decompose(sg: &SimpleGraph, anchor: &[bool], skip: &[bool]) -> Result<Vec<Gadget>> {
    let n = sg.vertex_count();
    for v in (0..n).filter(|&v| anchor[v]) {
        if let Some(w) = sg.neighbours(v).find(|&w| anchor[w]) {
            return Err(not_in_image(format!("anchors {v} and {w} are adjacent")));
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut gadgets = Vec::new();
    for start in 0..n {
        if anchor[start] || skip[start] || comp[start] != usize::MAX {
            continue;
        }
        let id = gadgets.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for w in sg.neighbours(v) {
                if skip[w] {
                    return Err(not_in_image(format!("gadget vertex {v} touches a pendant")));
                }
                if !anchor[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        gadgets.push(read_gadget(sg, anchor, &members)?);
    }
    Ok(gadgets)
}

/// Walks from `prev` into `cur` along degree-2 vertices until an anchor.
/// Returns the anchor and the number of inner vertices passed.
fn walk(sg: &SimpleGraph, anchor: &[bool], mut prev: usize, mut cur: usize, limit: usize) -> Result<(usize, usize)> {
    let mut count = 0;
    while !anchor[cur] {
        if sg.degree(cur) != 2 || count > limit {
            return Err(not_in_image(format!("vertex {cur} breaks a gadget path")));
        }
        count += 1;
        let next = sg.neighbours(cur).find(|&w| w != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }
    Ok((cur, count))
}

fn read_gadget(sg: &SimpleGraph, anchor: &[bool], members: &[usize]) -> Result<Gadget> {
    let size = members.len();
    let hubs: Vec<usize> = members.iter().copied().filter(|&v| sg.degree(v) != 2).collect();
    match hubs.as_slice() {
        [] => {
            // a path: start from a member next to an anchor
            let (first, a) = members
                .iter()
                .find_map(|&v| sg.neighbours(v).find(|&w| anchor[w]).map(|w| (v, w)))
                .ok_or_else(|| not_in_image("component not attached to any anchor"))?;
            let (b, count) = walk(sg, anchor, a, first, size)?;
            if count != size || a == b {
                return Err(not_in_image("malformed path gadget"));
            }
            Ok(Gadget {
                ends: [a, b],
                shape: Shape::Path(size),
            })
        }
        [v] if sg.degree(*v) == 4 => {
            let ns: Vec<usize> = sg.neighbours(*v).collect();
            let tri: Vec<usize> = ns
                .iter()
                .copied()
                .filter(|&x| sg.degree(x) == 2 && ns.iter().any(|&y| y != x && sg.has_edge(x, y)))
                .collect();
            if tri.len() != 2 || !sg.has_edge(tri[0], tri[1]) {
                return Err(not_in_image(format!("vertex {v} is not a triangle apex")));
            }
            let stubs: Vec<usize> = ns.iter().copied().filter(|x| !tri.contains(x)).collect();
            if stubs.iter().any(|&x| anchor[x]) {
                return Err(not_in_image("triangle gadget without stub"));
            }
            let (a, k1) = walk(sg, anchor, *v, stubs[0], size)?;
            let (b, k2) = walk(sg, anchor, *v, stubs[1], size)?;
            if k1 + k2 + 3 != size || a == b {
                return Err(not_in_image("malformed triangle gadget"));
            }
            Ok(Gadget {
                ends: [a, b],
                shape: Shape::Triangle(k1, k2),
            })
        }
        _ => Err(not_in_image(format!("component of {} vertices is no gadget", size))),
    }
}

pub fn restore_four_colour(sg: &SimpleGraph) -> Result<FourColourGraph> {
    let anchor = anchors(sg);
    if !anchor.iter().any(|&a| a) {
        return Err(not_in_image("no vertex of degree >= 3 outside triangles"));
    }
    let skip = vec![false; sg.vertex_count()];
    let gadgets = decompose(sg, &anchor, &skip)?;
    let mut index = vec![usize::MAX; sg.vertex_count()];
    let mut g = FourColourGraph::new("RESTORED");
    for v in (0..sg.vertex_count()).filter(|&v| anchor[v]) {
        index[v] = g.add_vertex((g.vertex_count() + 1).to_string())?;
    }
    let mut counts = [0usize; 4];
    for gd in gadgets {
        let [a, b] = gd.ends;
        let mut name = |c: Colour| {
            counts[c as usize] += 1;
            format!("{c}{}", counts[c as usize])
        };
        match gd.shape {
            Shape::Path(k @ 1..=3) => {
                let colour = [Colour::S, Colour::T, Colour::U][k - 1];
                g.add_edge(name(colour), colour, index[a], index[b])?;
            }
            Shape::Triangle(p, q) if p > C_OFFSET && q > C_OFFSET => {
                let (p, q) = ((p - C_OFFSET) as u32, (q - C_OFFSET) as u32);
                g.add_c_edge(name(Colour::C), index[a], p, index[b], q)?;
            }
            s => return Err(not_in_image(format!("gadget {s:?} encodes no edge"))),
        }
    }
    require_well_formed(&g).map_err(|e| not_in_image(e.to_string()))?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::oracle::direct_iso_four_colour;

    #[test]
    fn sphere4_sizes() {
        let g = fixtures::sphere4();
        let sg = to_simple_four_colour(&g).unwrap();
        // 4 originals + 2·1 (s) + 2·2 (t) + 2·3 (u)
        assert_eq!(sg.vertex_count(), 4 + 2 + 4 + 6);
        assert_eq!(sg.edge_count(), 18);
        assert!(sg.vertex_count() <= size_bound(&g));
        assert_eq!(size_bound(&g), 156);
    }

    #[test]
    fn c_edge_gadget_size() {
        let mut g = FourColourGraph::new("c");
        let a = g.add_vertex("a").unwrap();
        let b = g.add_vertex("b").unwrap();
        g.add_c_edge("c", a, 1, b, 1).unwrap();
        let mut m = Multigraph::new(2);
        push_plain_gadget(&mut m, &g, 0, |v| v).unwrap();
        assert_eq!(m.n - 2, 15);
    }

    #[test]
    fn sphere4_round_trip() {
        let g = fixtures::sphere4();
        let back = restore_four_colour(&to_simple_four_colour(&g).unwrap()).unwrap();
        assert!(direct_iso_four_colour(&g, &back).unwrap());
    }

    #[test]
    fn five_cycle_is_not_an_image() {
        let c5 = SimpleGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(matches!(restore_four_colour(&c5), Err(Error::NotInImage(_))));
        let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(restore_four_colour(&star), Err(Error::NotInImage(_))));
    }

    #[test]
    fn ill_formed_input_is_refused() {
        assert!(matches!(
            to_simple_four_colour(&FourColourGraph::new("e")),
            Err(Error::NotWellFormed(_))
        ));
    }
}
