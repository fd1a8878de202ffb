//! Exhaustive isomorphism tests that work on the graphs themselves rather
//! than on their reductions. Only meant for small inputs.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::model::four_colour::NominalTable;
use crate::model::{
    require_admissible_equipped, require_well_formed, EquippedGraph, FourColourGraph, OrientedCycle, VertexKind, Weight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 64,
            max_steps: 10_000_000,
        }
    }
}

struct Steps {
    left: u64,
}

impl Steps {
    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::TooLarge("step budget exhausted".into()));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Edge at every slot of a vertex: the t-edge first, then nominal indices
/// 0..=n+1.
fn slots(g: &FourColourGraph, table: &NominalTable) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut s = vec![table.t_edge[v]];
            s.extend((0..=table.n(v) + 1).map(|i| table.at(v, i)));
            s
        })
        .collect()
}

/// The edge map induced by a vertex map, if the vertex map is an
/// isomorphism. Edges at the same slot must correspond.
fn induced_edge_map(
    g1: &FourColourGraph,
    s1: &[Vec<usize>],
    g2: &FourColourGraph,
    s2: &[Vec<usize>],
    vmap: &[usize],
) -> Option<Vec<usize>> {
    let mut emap = vec![usize::MAX; g1.edge_count()];
    let mut used = vec![false; g2.edge_count()];
    for v in 0..g1.vertex_count() {
        let w = vmap[v];
        if s1[v].len() != s2[w].len() {
            return None;
        }
        for (&e, &f) in s1[v].iter().zip(&s2[w]) {
            if emap[e] == usize::MAX {
                if used[f] {
                    return None;
                }
                emap[e] = f;
                used[f] = true;
            } else if emap[e] != f {
                return None;
            }
        }
    }
    for (e, &f) in emap.iter().enumerate() {
        let (a, b) = (g1.edge(e), g2.edge(f));
        if a.colour != b.colour {
            return None;
        }
        let ends = [vmap[a.ends[0]], vmap[a.ends[1]]];
        let same = ends == b.ends && a.positions == b.positions;
        let swapped = ends == [b.ends[1], b.ends[0]] && a.positions.map(|[p, q]| [q, p]) == b.positions;
        if !same && !swapped {
            return None;
        }
    }
    Some(emap)
}

/// Whether `vmap` (indices of `g1` to indices of `g2`) is an isomorphism of
/// well-formed four-colour graphs.
pub fn is_four_colour_isomorphism(g1: &FourColourGraph, g2: &FourColourGraph, vmap: &[usize]) -> Result<bool> {
    let t1 = require_well_formed(g1)?;
    let t2 = require_well_formed(g2)?;
    if vmap.len() != g1.vertex_count() || g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut seen = vec![false; g2.vertex_count()];
    for &w in vmap {
        if w >= seen.len() || std::mem::replace(&mut seen[w], true) {
            return Ok(false);
        }
    }
    Ok(induced_edge_map(g1, &slots(g1, &t1), g2, &slots(g2, &t2), vmap).is_some())
}

/// Calls `f(vertex_map, edge_map)` for every isomorphism from `g1` to `g2`
/// until it returns `Break`.
pub fn for_each_iso(
    g1: &FourColourGraph,
    g2: &FourColourGraph,
    budget: OracleBudget,
    mut f: impl FnMut(&[usize], &[usize]) -> ControlFlow<()>,
) -> Result<()> {
    let t1 = require_well_formed(g1)?;
    let t2 = require_well_formed(g2)?;
    if g1.vertex_count().max(g2.vertex_count()) > budget.max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices",
            g1.vertex_count().max(g2.vertex_count())
        )));
    }
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(());
    }
    let mut steps = Steps { left: budget.max_steps };
    for_each_iso_inner(g1, &t1, g2, &t2, &mut steps, &mut f).map(|_| ())
}

fn for_each_iso_inner(
    g1: &FourColourGraph,
    t1: &NominalTable,
    g2: &FourColourGraph,
    t2: &NominalTable,
    steps: &mut Steps,
    f: &mut dyn FnMut(&[usize], &[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let (s1, s2) = (slots(g1, t1), slots(g2, t2));
    let mut search = Search {
        g1,
        s1: &s1,
        g2,
        s2: &s2,
        vmap: vec![usize::MAX; g1.vertex_count()],
        used: vec![false; g2.vertex_count()],
    };
    search.run(steps, f)
}

struct Search<'a> {
    g1: &'a FourColourGraph,
    s1: &'a [Vec<usize>],
    g2: &'a FourColourGraph,
    s2: &'a [Vec<usize>],
    vmap: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(
        &mut self,
        steps: &mut Steps,
        f: &mut dyn FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let Some(seed) = self.vmap.iter().position(|&w| w == usize::MAX) else {
            if let Some(emap) = induced_edge_map(self.g1, self.s1, self.g2, self.s2, &self.vmap) {
                return Ok(f(&self.vmap, &emap));
            }
            return Ok(ControlFlow::Continue(()));
        };
        for w in 0..self.g2.vertex_count() {
            steps.tick()?;
            if self.used[w] || self.s1[seed].len() != self.s2[w].len() {
                continue;
            }
            let mut placed = Vec::new();
            if self.propagate(seed, w, &mut placed, steps)? && self.run(steps, f)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            for v in placed {
                self.used[self.vmap[v]] = false;
                self.vmap[v] = usize::MAX;
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// Extends the map along slots from `v -> w`. Records every vertex it
    /// sets in `placed` so the caller can undo it.
    fn propagate(&mut self, v: usize, w: usize, placed: &mut Vec<usize>, steps: &mut Steps) -> Result<bool> {
        let mut stack = vec![(v, w)];
        while let Some((x, y)) = stack.pop() {
            steps.tick()?;
            if self.vmap[x] != usize::MAX {
                if self.vmap[x] != y {
                    return Ok(false);
                }
                continue;
            }
            if self.used[y] || self.s1[x].len() != self.s2[y].len() {
                return Ok(false);
            }
            self.vmap[x] = y;
            self.used[y] = true;
            placed.push(x);
            for (&e, &f) in self.s1[x].iter().zip(&self.s2[y]) {
                let (a, b) = (self.g1.edge(e), self.g2.edge(f));
                if a.colour != b.colour || a.is_loop() != b.is_loop() {
                    return Ok(false);
                }
                stack.push((a.other(x), b.other(y)));
            }
        }
        Ok(true)
    }
}

pub fn direct_iso_four_colour(g1: &FourColourGraph, g2: &FourColourGraph) -> Result<bool> {
    direct_iso_four_colour_with(g1, g2, OracleBudget::default())
}

pub fn direct_iso_four_colour_with(g1: &FourColourGraph, g2: &FourColourGraph, budget: OracleBudget) -> Result<bool> {
    Ok(direct_four_colour_map(g1, g2, budget)?.is_some())
}

/// First vertex isomorphism found, if any.
pub fn direct_four_colour_map(
    g1: &FourColourGraph,
    g2: &FourColourGraph,
    budget: OracleBudget,
) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_iso(g1, g2, budget, |vm, _| {
        found = Some(vm.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum KindKey {
    A,
    EMinus,
    EPlus,
    L,
    M { vertices: usize, edges: usize },
}

fn kind_key(k: &VertexKind) -> KindKey {
    match k {
        VertexKind::A => KindKey::A,
        VertexKind::E(Weight::Minus) => KindKey::EMinus,
        VertexKind::E(Weight::Plus) => KindKey::EPlus,
        VertexKind::L => KindKey::L,
        VertexKind::M(g) => KindKey::M {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        },
    }
}

struct Profile {
    key: Vec<KindKey>,
    out_deg: Vec<usize>,
    in_deg: Vec<usize>,
    /// Number of edges tail -> head.
    mult: BTreeMap<(usize, usize), usize>,
}

fn profile(u: &EquippedGraph) -> Profile {
    let n = u.vertex_count();
    let mut p = Profile {
        key: u.vertices().iter().map(|v| kind_key(&v.kind)).collect(),
        out_deg: vec![0; n],
        in_deg: vec![0; n],
        mult: BTreeMap::new(),
    };
    for e in u.edges() {
        p.out_deg[e.tail] += 1;
        p.in_deg[e.head] += 1;
        *p.mult.entry((e.tail, e.head)).or_insert(0) += 1;
    }
    p
}

pub fn direct_iso_equipped(u1: &EquippedGraph, u2: &EquippedGraph) -> Result<bool> {
    direct_iso_equipped_with(u1, u2, OracleBudget::default())
}

pub fn direct_iso_equipped_with(u1: &EquippedGraph, u2: &EquippedGraph, budget: OracleBudget) -> Result<bool> {
    Ok(direct_equipped_map(u1, u2, budget)?.is_some())
}

/// Searches bijections of the vertices that preserve kinds and directed edge
/// multiplicities, then asks for every M-pair a four-colour isomorphism that
/// carries the tags of one side onto the tags of the other.
pub fn direct_equipped_map(u1: &EquippedGraph, u2: &EquippedGraph, budget: OracleBudget) -> Result<Option<Vec<usize>>> {
    require_admissible_equipped(u1)?;
    require_admissible_equipped(u2)?;
    let n = u1.vertex_count();
    if n.max(u2.vertex_count()) > budget.max_vertices {
        return Err(Error::TooLarge(format!("{} vertices", n.max(u2.vertex_count()))));
    }
    if n != u2.vertex_count() || u1.edge_count() != u2.edge_count() {
        return Ok(None);
    }
    let (p1, p2) = (profile(u1), profile(u2));
    let mut keys1 = p1.key.clone();
    let mut keys2 = p2.key.clone();
    keys1.sort();
    keys2.sort();
    if keys1 != keys2 {
        return Ok(None);
    }
    let mut st = EqSearch {
        u1,
        u2,
        p1: &p1,
        p2: &p2,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        steps: Steps { left: budget.max_steps },
    };
    Ok(st.assign(0)?.then_some(st.map))
}

struct EqSearch<'a> {
    u1: &'a EquippedGraph,
    u2: &'a EquippedGraph,
    p1: &'a Profile,
    p2: &'a Profile,
    map: Vec<usize>,
    used: Vec<bool>,
    steps: Steps,
}

impl EqSearch<'_> {
    fn assign(&mut self, v: usize) -> Result<bool> {
        if v == self.map.len() {
            return self.m_pairs_match();
        }
        for w in 0..self.map.len() {
            self.steps.tick()?;
            if self.used[w] || !self.compatible(v, w) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.assign(v + 1)? {
                return Ok(true);
            }
            self.map[v] = usize::MAX;
            self.used[w] = false;
        }
        Ok(false)
    }

    fn compatible(&self, v: usize, w: usize) -> bool {
        let (p1, p2) = (self.p1, self.p2);
        if p1.key[v] != p2.key[w] || p1.out_deg[v] != p2.out_deg[w] || p1.in_deg[v] != p2.in_deg[w] {
            return false;
        }
        let m = |p: &Profile, a, b| p.mult.get(&(a, b)).copied().unwrap_or(0);
        if m(p1, v, v) != m(p2, w, w) {
            return false;
        }
        (0..v).all(|x| {
            let y = self.map[x];
            m(p1, v, x) == m(p2, w, y) && m(p1, x, v) == m(p2, y, w)
        })
    }

    fn m_pairs_match(&mut self) -> Result<bool> {
        for v in 0..self.map.len() {
            let (VertexKind::M(g1), VertexKind::M(g2)) = (self.u1.kind(v), self.u2.kind(self.map[v])) else {
                continue;
            };
            let w = self.map[v];
            let want = tagged_edges(self.u2, w, |x| x, |c| c.clone());
            let (t1, t2) = (require_well_formed(g1)?, require_well_formed(g2)?);
            let map = &self.map;
            let u1 = self.u1;
            let ok = for_each_iso_inner(g1, &t1, g2, &t2, &mut self.steps, &mut |vm, em| {
                let got = tagged_edges(u1, v, |x| map[x], |c| c.map(|a| vm[a], |e| em[e]));
                if got == want {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?
            .is_break();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// (other end, M is tail, tag) for every edge at M-vertex `m`, mapped and
/// sorted.
fn tagged_edges(
    u: &EquippedGraph,
    m: usize,
    vmap: impl Fn(usize) -> usize,
    cmap: impl Fn(&OrientedCycle) -> OrientedCycle,
) -> Vec<(usize, bool, Vec<(usize, usize)>)> {
    let mut out: Vec<_> = u
        .incident(m)
        .iter()
        .map(|&e| {
            let edge = u.edge(e);
            let tag = edge
                .cycle
                .as_ref()
                .map(&cmap)
                .map(|c| c.darts().iter().map(|d| (d.vertex, d.edge)).collect())
                .unwrap_or_default();
            (vmap(edge.other(m)), edge.tail == m, tag)
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::Colour;

    #[test]
    fn sphere4_has_four_automorphisms() {
        // (), (12)(34), (13)(24), (14)(23)
        let g = fixtures::sphere4();
        let mut count = 0;
        for_each_iso(&g, &g, OracleBudget::default(), |_, _| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, 4);
    }

    #[test]
    fn rewired_differs() {
        let g = fixtures::sphere4();
        assert!(!direct_iso_four_colour(&g, &fixtures::sphere4_rewired()).unwrap());
        assert!(direct_iso_four_colour(&g, &g).unwrap());
    }

    #[test]
    fn explicit_maps() {
        let g = fixtures::sphere4();
        let id: Vec<usize> = (0..4).collect();
        assert!(is_four_colour_isomorphism(&g, &g, &id).unwrap());
        // (1 2)(3 4) keeps t12, u12, t34, u34 and swaps s13 with s24
        assert!(is_four_colour_isomorphism(&g, &g, &[1, 0, 3, 2]).unwrap());
        assert!(!is_four_colour_isomorphism(&g, &g, &[1, 0, 2, 3]).unwrap());
        assert!(!is_four_colour_isomorphism(&g, &g, &[0, 0, 1, 2]).unwrap());
    }

    #[test]
    fn c_positions_matter() {
        let build = |p: u32, q: u32| {
            let mut g = FourColourGraph::new("x");
            let a = g.add_vertex("a").unwrap();
            let b = g.add_vertex("b").unwrap();
            g.add_edge("t", Colour::T, a, b).unwrap();
            g.add_edge("u", Colour::U, a, b).unwrap();
            g.add_edge("s", Colour::S, a, b).unwrap();
            g.add_c_edge("c1", a, p, b, q).unwrap();
            g.add_c_edge("c2", a, 3 - p, b, 3 - q).unwrap();
            g
        };
        assert!(direct_iso_four_colour(&build(1, 1), &build(2, 2)).unwrap());
        assert!(!direct_iso_four_colour(&build(1, 1), &build(1, 2)).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g = fixtures::sphere4();
        let tiny = OracleBudget {
            max_vertices: 3,
            max_steps: 10,
        };
        assert!(matches!(
            direct_iso_four_colour_with(&g, &g, tiny),
            Err(Error::TooLarge(_))
        ));
        let few_steps = OracleBudget {
            max_vertices: 64,
            max_steps: 2,
        };
        assert!(matches!(
            direct_iso_four_colour_with(&g, &g, few_steps),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn equipped_fixtures() {
        for u in fixtures::equipped_all() {
            assert!(direct_iso_equipped(&u, &u).unwrap(), "{}", u.name());
        }
        assert!(!direct_iso_equipped(&fixtures::proj_al(), &fixtures::sphere_cyc()).unwrap());
    }

    #[test]
    fn weight_flip_is_detected() {
        let u = fixtures::torus_ll();
        let mut v = u.clone();
        let e1 = v.vertex_by_id("e1").unwrap();
        v.set_kind(e1, VertexKind::E(Weight::Minus));
        assert!(!direct_iso_equipped(&u, &v).unwrap());
    }
}
