//! Γ*_t: the equipped graph encoded as a simple graph, and its inverse.
//!
//! Each M-vertex is replaced by its four-colour graph and each (M,L) or
//! (L,M) edge by edges between the L-vertex and every vertex of the tagged
//! cycle. Pendant leaves mark the kind of the remaining vertices
//! (A: 2, L: 3, E−: 4, E+: 5). Directed edges become (k,1) triangle gadgets
//! with the tail on the k-side: k = 2 for uncoloured edges and 3, 4, 5 for
//! s-, t- and u-edges of a tagged cycle, oriented along the cycle. A t-edge
//! lying on two tagged cycles that disagree on its direction gets a
//! symmetric (4,4) gadget. All other four-colour edges use the Γ*_M gadgets.

use std::collections::{BTreeMap, HashMap};

use super::reduce::{anchors, decompose, push_plain_gadget, Shape, C_OFFSET};
use super::simple::{Multigraph, SimpleGraph};
use crate::error::{Error, Result};
use crate::invariants::cycles::two_colour_cycles;
use crate::model::four_colour::NominalTable;
use crate::model::{
    require_admissible_equipped, validate_equipped, validate_four_colour, Colour, CycleKind, Dart, EquippedGraph,
    FourColourGraph, OrientedCycle, VertexKind, Weight,
};

const PLAIN_ARROW: usize = 2;
const CONFLICT_T: usize = 4;

fn arrow_length(c: Colour) -> usize {
    match c {
        Colour::S => 3,
        Colour::T => 4,
        Colour::U => 5,
        Colour::C => unreachable!("c-edges lie on no tagged cycle"),
    }
}

pub fn pendant_count(kind: &VertexKind) -> usize {
    match kind {
        VertexKind::A => 2,
        VertexKind::L => 3,
        VertexKind::E(Weight::Minus) => 4,
        VertexKind::E(Weight::Plus) => 5,
        VertexKind::M(_) => 0,
    }
}

/// Where the pieces of an equipped graph landed in its Γ*_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquippedLayout {
    /// Simple-graph vertex of each non-M vertex.
    pub vertex: Vec<Option<usize>>,
    /// First simple-graph vertex of the four-colour graph of each M-vertex;
    /// its vertices follow contiguously.
    pub m_offset: Vec<Option<usize>>,
    /// Number of original vertices (non-M vertices plus all four-colour
    /// vertices); they occupy `0..originals`.
    pub originals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Backward,
    Both,
}

/// Orientation each edge of `g` receives from the tagged cycles.
fn cycle_orientations(g: &FourColourGraph, tags: &[&OrientedCycle]) -> HashMap<usize, Direction> {
    let mut out = HashMap::new();
    for c in tags {
        for d in c.darts() {
            let dir = if g.edge(d.edge).ends[0] == d.vertex {
                Direction::Forward
            } else {
                Direction::Backward
            };
            out.entry(d.edge)
                .and_modify(|old| {
                    if *old != dir {
                        *old = Direction::Both
                    }
                })
                .or_insert(dir);
        }
    }
    out
}

pub fn to_simple_equipped(u: &EquippedGraph) -> Result<SimpleGraph> {
    to_simple_equipped_with_layout(u).map(|(sg, _)| sg)
}

pub fn to_simple_equipped_with_layout(u: &EquippedGraph) -> Result<(SimpleGraph, EquippedLayout)> {
    require_admissible_equipped(u)?;
    let mut m = Multigraph::new(0);
    let mut vertex = vec![None; u.vertex_count()];
    let mut m_offset = vec![None; u.vertex_count()];
    for v in 0..u.vertex_count() {
        if !u.kind(v).is_m() {
            vertex[v] = Some(m.add_vertex());
        }
    }
    for v in 0..u.vertex_count() {
        if let VertexKind::M(g) = u.kind(v) {
            m_offset[v] = Some(m.n);
            for _ in 0..g.vertex_count() {
                m.add_vertex();
            }
        }
    }
    let originals = m.n;

    for v in 0..u.vertex_count() {
        if let Some(x) = vertex[v] {
            for _ in 0..pendant_count(u.kind(v)) {
                let leaf = m.add_vertex();
                m.add_edge(x, leaf);
            }
        }
    }

    for (e, edge) in u.edges().iter().enumerate() {
        match u.m_end(e) {
            None => {
                let (t, h) = (vertex[edge.tail].expect("non-M"), vertex[edge.head].expect("non-M"));
                let i = m.add_edge(t, h);
                m.k1k2_subdivide(i, PLAIN_ARROW, 1)?;
            }
            Some(mv) => {
                let l = vertex[edge.other(mv)].expect("admissible: M meets only L");
                let off = m_offset[mv].expect("M-vertex");
                let cycle = edge.cycle.as_ref().expect("admissible: tagged");
                for x in cycle.vertices() {
                    let i = if edge.tail == mv {
                        m.add_edge(off + x, l)
                    } else {
                        m.add_edge(l, off + x)
                    };
                    m.k1k2_subdivide(i, PLAIN_ARROW, 1)?;
                }
            }
        }
    }

    for v in 0..u.vertex_count() {
        let VertexKind::M(g) = u.kind(v) else { continue };
        let off = m_offset[v].expect("M-vertex");
        let tags: Vec<&OrientedCycle> = u.incident(v).iter().filter_map(|&e| u.edge(e).cycle.as_ref()).collect();
        let dirs = cycle_orientations(g, &tags);
        for e in 0..g.edge_count() {
            let edge = g.edge(e);
            let [a, b] = edge.ends;
            match dirs.get(&e) {
                None => push_plain_gadget(&mut m, g, e, |x| off + x)?,
                Some(Direction::Both) => {
                    let i = m.add_edge(off + a, off + b);
                    m.k1k2_subdivide(i, CONFLICT_T, CONFLICT_T)?;
                }
                Some(&d) => {
                    let (t, h) = if d == Direction::Forward { (a, b) } else { (b, a) };
                    let i = m.add_edge(off + t, off + h);
                    m.k1k2_subdivide(i, arrow_length(edge.colour), 1)?;
                }
            }
        }
    }
    let sg = m.to_simple()?;
    Ok((
        sg,
        EquippedLayout {
            vertex,
            m_offset,
            originals,
        },
    ))
}

fn not_in_image(msg: impl Into<String>) -> Error {
    Error::NotInImage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decoded {
    /// Uncoloured directed edge.
    Arrow { tail: usize, head: usize },
    /// Four-colour edge; `tail` is set when a tagged cycle orients it.
    Coloured {
        colour: Colour,
        ends: [usize; 2],
        positions: Option<[u32; 2]>,
        tail: Option<usize>,
        conflict: bool,
    },
}

fn decode(ends: [usize; 2], shape: Shape) -> Result<Decoded> {
    let [a, b] = ends;
    let coloured = |colour, tail, conflict| Decoded::Coloured {
        colour,
        ends,
        positions: None,
        tail,
        conflict,
    };
    Ok(match shape {
        Shape::Path(k @ 1..=3) => coloured([Colour::S, Colour::T, Colour::U][k - 1], None, false),
        Shape::Triangle(CONFLICT_T, CONFLICT_T) => coloured(Colour::T, None, true),
        Shape::Triangle(p, q) if p > C_OFFSET && q > C_OFFSET => Decoded::Coloured {
            colour: Colour::C,
            ends,
            positions: Some([(p - C_OFFSET) as u32, (q - C_OFFSET) as u32]),
            tail: None,
            conflict: false,
        },
        Shape::Triangle(k, 1) | Shape::Triangle(1, k) if (PLAIN_ARROW..=5).contains(&k) => {
            let (tail, head) = if matches!(shape, Shape::Triangle(_, 1)) && k != 1 {
                (a, b)
            } else {
                (b, a)
            };
            match k {
                PLAIN_ARROW => Decoded::Arrow { tail, head },
                _ => coloured([Colour::S, Colour::T, Colour::U][k - 3], Some(tail), false),
            }
        }
        s => return Err(not_in_image(format!("gadget {s:?} encodes no edge"))),
    })
}

pub fn restore_equipped(sg: &SimpleGraph) -> Result<EquippedGraph> {
    let n = sg.vertex_count();
    let anchor = anchors(sg);
    let leaf: Vec<bool> = (0..n).map(|v| sg.degree(v) == 1).collect();
    for v in (0..n).filter(|&v| leaf[v]) {
        let w = sg.neighbours(v).next().expect("degree 1");
        if !anchor[w] {
            return Err(not_in_image(format!("leaf {v} hangs off a non-anchor")));
        }
    }
    if !anchor.iter().any(|&a| a) {
        return Err(not_in_image("no vertex of degree >= 3 outside triangles"));
    }
    let mut kind_of: Vec<Option<VertexKind>> = vec![None; n];
    for v in (0..n).filter(|&v| anchor[v]) {
        kind_of[v] = match sg.pendant_count(v) {
            0 => None,
            2 => Some(VertexKind::A),
            3 => Some(VertexKind::L),
            4 => Some(VertexKind::E(Weight::Minus)),
            5 => Some(VertexKind::E(Weight::Plus)),
            k => return Err(not_in_image(format!("vertex {v} has {k} pendant leaves"))),
        };
    }
    let is_fc = |v: usize| anchor[v] && kind_of[v].is_none();

    let gadgets = decompose(sg, &anchor, &leaf)?;
    let decoded: Vec<Decoded> = gadgets
        .iter()
        .map(|gd| decode(gd.ends, gd.shape))
        .collect::<Result<_>>()?;

    // components of four-colour vertices
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut fc_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for d in &decoded {
        match *d {
            Decoded::Coloured { ends: [a, b], .. } => {
                if !is_fc(a) || !is_fc(b) {
                    return Err(not_in_image("coloured edge outside the four-colour part"));
                }
                fc_adj[a].push(b);
                fc_adj[b].push(a);
            }
            Decoded::Arrow { tail, head } => {
                let ok = match (is_fc(tail), is_fc(head)) {
                    (false, false) => true,
                    (true, false) => kind_of[head] == Some(VertexKind::L),
                    (false, true) => kind_of[tail] == Some(VertexKind::L),
                    (true, true) => false,
                };
                if !ok {
                    return Err(not_in_image("uncoloured edge joins the wrong kinds"));
                }
            }
        }
    }
    for v in (0..n).filter(|&v| is_fc(v)) {
        if comp[v] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp[v] = id;
        let mut members = vec![v];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for &y in &fc_adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }

    // four-colour graphs; local[v] is v's index in its graph
    let mut local = vec![usize::MAX; n];
    let mut graphs: Vec<FourColourGraph> = Vec::new();
    for (ci, members) in comps.iter().enumerate() {
        let mut g = FourColourGraph::new(format!("RESTORED_M{}", ci + 1));
        for &v in members {
            local[v] = g.add_vertex((g.vertex_count() + 1).to_string())?;
        }
        graphs.push(g);
    }
    let mut counts = vec![[0usize; 4]; comps.len()];
    // observed orientation per (component, local edge)
    let mut observed: Vec<HashMap<usize, Direction>> = vec![HashMap::new(); comps.len()];
    for d in &decoded {
        let Decoded::Coloured {
            colour,
            ends: [a, b],
            positions,
            tail,
            conflict,
        } = *d
        else {
            continue;
        };
        let ci = comp[a];
        let cnt = &mut counts[ci][colour as usize];
        *cnt += 1;
        let id = format!("{colour}{cnt}");
        let g = &mut graphs[ci];
        let e = match positions {
            Some([p, q]) => g.add_c_edge(id, local[a], p, local[b], q)?,
            None => g.add_edge(id, colour, local[a], local[b])?,
        };
        if conflict {
            observed[ci].insert(e, Direction::Both);
        } else if let Some(t) = tail {
            observed[ci].insert(
                e,
                if t == a {
                    Direction::Forward
                } else {
                    Direction::Backward
                },
            );
        }
    }
    for g in &graphs {
        let report = validate_four_colour(g);
        if !report.is_empty() {
            return Err(not_in_image(format!("restored four-colour graph: {report}")));
        }
    }

    // vertices of the equipped graph, ordered by their smallest simple vertex
    let mut u = EquippedGraph::new("RESTORED");
    let mut upsilon = vec![usize::MAX; n];
    let mut m_vertex = vec![usize::MAX; comps.len()];
    let mut counters: BTreeMap<&str, usize> = BTreeMap::new();
    let mut name = |p: &'static str| {
        let c = counters.entry(p).or_insert(0);
        *c += 1;
        format!("{p}{c}")
    };
    for v in (0..n).filter(|&v| anchor[v]) {
        match &kind_of[v] {
            Some(k) => {
                let p = match k {
                    VertexKind::A => "a",
                    VertexKind::L => "l",
                    _ => "e",
                };
                upsilon[v] = u.add_vertex(name(p), k.clone())?;
            }
            None if comps[comp[v]][0] == v => {
                let ci = comp[v];
                m_vertex[ci] = u.add_vertex(name("m"), VertexKind::M(graphs[ci].clone()))?;
            }
            None => {}
        }
    }

    // uncoloured edges: between originals directly, or grouped per (L, M)
    let mut edge_names = 0;
    let mut next_edge = || {
        edge_names += 1;
        format!("x{edge_names}")
    };
    let mut groups: BTreeMap<(usize, usize, bool), Vec<usize>> = BTreeMap::new();
    for d in &decoded {
        let Decoded::Arrow { tail, head } = *d else { continue };
        match (is_fc(tail), is_fc(head)) {
            (false, false) => {
                u.add_edge(next_edge(), upsilon[tail], upsilon[head], None)?;
            }
            (true, false) => groups.entry((comp[tail], head, true)).or_default().push(local[tail]),
            _ => groups.entry((comp[head], tail, false)).or_default().push(local[head]),
        }
    }
    let mut tags_per_comp: Vec<Vec<OrientedCycle>> = vec![Vec::new(); comps.len()];
    for ((ci, l, into_l), mut xs) in groups {
        if groups_conflict(&xs) {
            return Err(not_in_image("repeated L connection"));
        }
        xs.sort_unstable();
        let g = &graphs[ci];
        let kind = if into_l { CycleKind::Tu } else { CycleKind::St };
        let table = NominalTable::build(g).expect("validated");
        let cycle = two_colour_cycles(g, &table, kind)
            .into_iter()
            .find(|c| {
                let mut vs: Vec<usize> = c.vertices().collect();
                vs.sort_unstable();
                vs == xs
            })
            .ok_or_else(|| not_in_image(format!("L-connections of {l} match no {kind} cycle")))?;
        let cycle = orient_by(g, &observed[ci], cycle, if into_l { Colour::U } else { Colour::S })?;
        let m = m_vertex[ci];
        let (t, h) = if into_l { (m, upsilon[l]) } else { (upsilon[l], m) };
        tags_per_comp[ci].push(cycle.clone());
        u.add_edge(next_edge(), t, h, Some(cycle))?;
    }

    // the tags must explain exactly the oriented gadgets that were seen
    for (ci, g) in graphs.iter().enumerate() {
        let tags: Vec<&OrientedCycle> = tags_per_comp[ci].iter().collect();
        if cycle_orientations(g, &tags) != observed[ci] {
            return Err(not_in_image("edge orientations disagree with the tagged cycles"));
        }
    }
    let report = validate_equipped(&u);
    if !report.is_empty() {
        return Err(not_in_image(format!("restored graph is not admissible: {report}")));
    }
    Ok(u)
}

fn groups_conflict(xs: &[usize]) -> bool {
    let mut s = xs.to_vec();
    s.sort_unstable();
    s.windows(2).any(|w| w[0] == w[1])
}

/// Picks the direction of `cycle` in which its `key`-coloured edges run
/// as observed.
fn orient_by(
    g: &FourColourGraph,
    observed: &HashMap<usize, Direction>,
    cycle: OrientedCycle,
    key: Colour,
) -> Result<OrientedCycle> {
    let d: Dart = *cycle
        .darts()
        .iter()
        .find(|d| g.edge(d.edge).colour == key)
        .expect("two-coloured cycles contain both colours");
    let forward = if g.edge(d.edge).ends[0] == d.vertex {
        Direction::Forward
    } else {
        Direction::Backward
    };
    match observed.get(&d.edge) {
        Some(&o) if o == forward => Ok(cycle),
        Some(Direction::Both) | None => Err(not_in_image("tagged cycle edge without orientation")),
        Some(_) => Ok(cycle.reversed()),
    }
}
