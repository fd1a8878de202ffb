//! Seeded random graphs for tests and benchmarks.
//!
//! Four-colour graphs are built from the flag graph of a random one-vertex
//! map: every map edge gives four vertices joined by u-pairs (0,1), (2,3) and
//! s-pairs (0,2), (1,3), and t-edges form a random perfect matching. Such a
//! graph has no c-edges and all corner orbits of length 4. Random "cell
//! collapses" then merge a t-adjacent pair of vertices into a new c-edge,
//! which keeps orbits of length 4. Each candidate is still passed through
//! [`validate_four_colour`] and discarded on failure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::invariants::cycles::two_colour_cycles;
use crate::model::four_colour::NominalTable;
use crate::model::{
    validate_four_colour, Colour, CycleKind, EquippedGraph, FourColourGraph, OrientedCycle, VertexKind, Weight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Candidates drawn before giving up.
    pub max_attempts: usize,
    /// Upper bound on c-edges as a fraction of vertices, in percent.
    pub max_c_percent: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_attempts: 1000,
            max_c_percent: 50,
        }
    }
}

pub fn random_admissible(n_target: usize, seed: u64) -> Result<FourColourGraph> {
    random_admissible_with(n_target, seed, GeneratorConfig::default())
}

pub fn random_admissible_with(n_target: usize, seed: u64, cfg: GeneratorConfig) -> Result<FourColourGraph> {
    if n_target < 4 || n_target % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "vertex count must be even and at least 4, got {n_target}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cfg.max_attempts {
        if let Some(g) = attempt(n_target, cfg, &mut rng) {
            if validate_four_colour(&g).is_empty() {
                let mut g = g;
                g.set_name(format!("G{n_target}_{seed}"));
                return Ok(g);
            }
        }
    }
    Err(Error::GenerationBudgetExceeded(cfg.max_attempts))
}

#[derive(Debug, Clone)]
struct ProtoEdge {
    colour: Colour,
    ends: [usize; 2],
}

#[derive(Debug, Clone)]
struct Proto {
    alive: Vec<bool>,
    s: Vec<usize>,
    t: Vec<usize>,
    u: Vec<usize>,
    cs: Vec<Vec<usize>>,
    edges: Vec<ProtoEdge>,
}

impl Proto {
    fn other(&self, e: usize, v: usize) -> usize {
        let [a, b] = self.edges[e].ends;
        if a == v {
            b
        } else {
            a
        }
    }

    fn push(&mut self, colour: Colour, a: usize, b: usize) -> usize {
        self.edges.push(ProtoEdge { colour, ends: [a, b] });
        self.edges.len() - 1
    }

    fn connected(&self) -> bool {
        let n = self.alive.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.ends[0]].push(e.ends[1]);
            adj[e.ends[1]].push(e.ends[0]);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Merges vertex `b` and its t-partner into a new c-edge, if the local
    /// configuration allows it.
    fn collapse(&mut self, b: usize) -> bool {
        let b2 = self.other(self.t[b], b);
        let x = self.other(self.s[b], b);
        let x2 = self.other(self.s[b2], b2);
        let y = self.other(self.u[b2], b2);
        let y2 = self.other(self.u[b], b);
        let gone = [b, b2];
        if [x, x2, y, y2].iter().any(|v| gone.contains(v)) || x == x2 || y == y2 || x == y {
            return false;
        }
        if self.cs[b2].iter().any(|&c| self.other(c, b2) == x) || self.cs[b].iter().any(|&c| self.other(c, b) == y) {
            return false;
        }
        for &c in &self.cs[b2].clone() {
            let end = self.edges[c].ends.iter().position(|&v| v == b2).expect("incident");
            self.edges[c].ends[end] = x;
        }
        for &c in &self.cs[b].clone() {
            let end = self.edges[c].ends.iter().position(|&v| v == b).expect("incident");
            self.edges[c].ends[end] = y;
        }
        let c = self.push(Colour::C, x, y);
        let from_b2 = std::mem::take(&mut self.cs[b2]);
        let from_b = std::mem::take(&mut self.cs[b]);
        self.cs[x].push(c);
        self.cs[x].extend(from_b2);
        let mut ys = from_b;
        ys.push(c);
        ys.extend(std::mem::take(&mut self.cs[y]));
        self.cs[y] = ys;
        let s = self.push(Colour::S, x, x2);
        self.s[x] = s;
        self.s[x2] = s;
        let u = self.push(Colour::U, y, y2);
        self.u[y] = u;
        self.u[y2] = u;
        self.alive[b] = false;
        self.alive[b2] = false;
        true
    }

    fn into_graph(self, rng: &mut ChaCha8Rng) -> FourColourGraph {
        let mut order: Vec<usize> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        order.shuffle(rng);
        let mut new_id = vec![usize::MAX; self.alive.len()];
        let mut g = FourColourGraph::new("G");
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = g.add_vertex((i + 1).to_string()).expect("fresh ids");
        }
        let mut live: Vec<usize> = (0..self.edges.len())
            .filter(|&e| self.edges[e].ends.iter().all(|&v| self.alive[v]))
            .collect();
        live.shuffle(rng);
        let mut counts = [0usize; 4];
        for e in live {
            let edge = &self.edges[e];
            let k = edge.colour as usize;
            counts[k] += 1;
            let id = format!("{}{}", edge.colour, counts[k]);
            let [a, b] = edge.ends;
            if edge.colour == Colour::C {
                let pa = self.cs[a].iter().position(|&c| c == e).expect("listed") as u32 + 1;
                let pb = self.cs[b].iter().position(|&c| c == e).expect("listed") as u32 + 1;
                g.add_c_edge(id, new_id[a], pa, new_id[b], pb).expect("valid ends");
            } else {
                g.add_edge(id, edge.colour, new_id[a], new_id[b]).expect("valid ends");
            }
        }
        g
    }
}

fn attempt(n: usize, cfg: GeneratorConfig, rng: &mut ChaCha8Rng) -> Option<FourColourGraph> {
    let h = n / 2;
    let k_max = (n * cfg.max_c_percent / 100).max(h % 2);
    let choices: Vec<usize> = (0..=k_max).filter(|k| k % 2 == h % 2).collect();
    let k = *choices.choose(rng)?;
    let m = (h + k) / 2;
    let flags = 4 * m;
    let mut p = Proto {
        alive: vec![true; flags],
        s: vec![0; flags],
        t: vec![0; flags],
        u: vec![0; flags],
        cs: vec![Vec::new(); flags],
        edges: Vec::new(),
    };
    for e in 0..m {
        let f = 4 * e;
        for (a, b) in [(f, f + 1), (f + 2, f + 3)] {
            let id = p.push(Colour::U, a, b);
            p.u[a] = id;
            p.u[b] = id;
        }
        for (a, b) in [(f, f + 2), (f + 1, f + 3)] {
            let id = p.push(Colour::S, a, b);
            p.s[a] = id;
            p.s[b] = id;
        }
    }
    let mut perm: Vec<usize> = (0..flags).collect();
    perm.shuffle(rng);
    for pair in perm.chunks(2) {
        let id = p.push(Colour::T, pair[0], pair[1]);
        p.t[pair[0]] = id;
        p.t[pair[1]] = id;
    }
    if !p.connected() {
        return None;
    }
    let mut done = 0;
    let mut tries = 0;
    while done < k {
        tries += 1;
        if tries > 50 * (k + 1) {
            return None;
        }
        let b = rng.gen_range(0..flags);
        if p.alive[b] && p.collapse(b) {
            done += 1;
        }
    }
    Some(p.into_graph(rng))
}

/// A copy of `g` with vertices and edges declared in a random order and
/// renamed. Returns the graph and, for each old vertex index, its new index.
pub fn shuffled_four_colour(g: &FourColourGraph, rng: &mut impl Rng) -> (FourColourGraph, Vec<usize>) {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut map = vec![0; n];
    let mut h = FourColourGraph::new(g.name());
    for (i, &v) in order.iter().enumerate() {
        map[v] = h.add_vertex(format!("r{}", i + 1)).expect("fresh ids");
    }
    let (h, _) = copy_edges(g, h, &map, rng);
    (h, map)
}

fn copy_edges(
    g: &FourColourGraph,
    mut h: FourColourGraph,
    map: &[usize],
    rng: &mut impl Rng,
) -> (FourColourGraph, Vec<usize>) {
    let mut edges: Vec<usize> = (0..g.edge_count()).collect();
    edges.shuffle(rng);
    let mut emap = vec![0; g.edge_count()];
    for (i, &e) in edges.iter().enumerate() {
        let edge = g.edge(e);
        let id = format!("f{}", i + 1);
        let [a, b] = edge.ends;
        // endpoints may also be swapped
        let flip = rng.gen_bool(0.5);
        let (a, b, pos) = if flip {
            (b, a, edge.positions.map(|[p, q]| [q, p]))
        } else {
            (a, b, edge.positions)
        };
        emap[e] = match pos {
            Some([p, q]) => h.add_c_edge(id, map[a], p, map[b], q),
            None => h.add_edge(id, edge.colour, map[a], map[b]),
        }
        .expect("valid copy");
    }
    (h, emap)
}

/// Renames and reorders everything in `u`, including the vertices and edges
/// of each four-colour graph; cycle tags are carried along.
pub fn shuffled_equipped(u: &EquippedGraph, rng: &mut impl Rng) -> (EquippedGraph, Vec<usize>) {
    let n = u.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut map = vec![0; n];
    let mut maps = vec![None; n];
    let mut w = EquippedGraph::new(u.name());
    for (i, &v) in order.iter().enumerate() {
        let kind = match u.kind(v) {
            VertexKind::M(g) => {
                let k = g.vertex_count();
                let mut vo: Vec<usize> = (0..k).collect();
                vo.shuffle(rng);
                let mut vmap = vec![0; k];
                let mut h = FourColourGraph::new(format!("{}_r{}", g.name(), i + 1));
                for (j, &x) in vo.iter().enumerate() {
                    vmap[x] = h.add_vertex(format!("q{}", j + 1)).expect("fresh ids");
                }
                let (h, emap) = copy_edges(g, h, &vmap, rng);
                maps[v] = Some((vmap, emap));
                VertexKind::M(h)
            }
            k => k.clone(),
        };
        map[v] = w.add_vertex(format!("y{}", i + 1), kind).expect("fresh ids");
    }
    let mut edges: Vec<usize> = (0..u.edge_count()).collect();
    edges.shuffle(rng);
    for (i, &e) in edges.iter().enumerate() {
        let edge = u.edge(e);
        let cycle = edge
            .cycle
            .as_ref()
            .map(|c| match u.m_end(e).and_then(|m| maps[m].as_ref()) {
                Some((vmap, emap)) => c.map(|x| vmap[x], |x| emap[x]),
                None => c.clone(),
            });
        w.add_edge(format!("z{}", i + 1), map[edge.tail], map[edge.head], cycle)
            .expect("valid copy");
    }
    (w, map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Polarity {
    In,
    Out,
}

struct EqBuilder {
    u: EquippedGraph,
    rng: ChaCha8Rng,
    budget: usize,
    counts: [usize; 5],
    /// Open slots: (L-vertex, polarity).
    open: Vec<(usize, Polarity)>,
    polarity: Vec<Option<Polarity>>,
}

impl EqBuilder {
    fn name(&mut self, k: usize, prefix: &str) -> String {
        self.counts[k] += 1;
        format!("{prefix}{}", self.counts[k])
    }

    fn vertex(&mut self, kind: VertexKind) -> usize {
        let (k, p) = match kind {
            VertexKind::A => (0, "a"),
            VertexKind::E(_) => (1, "e"),
            VertexKind::L => (2, "l"),
            VertexKind::M(_) => (3, "m"),
        };
        let id = self.name(k, p);
        self.budget = self.budget.saturating_sub(1);
        let v = self.u.add_vertex(id, kind).expect("fresh ids");
        self.polarity.push(None);
        v
    }

    fn edge(&mut self, tail: usize, head: usize, cycle: Option<OrientedCycle>) {
        let id = self.name(4, "x");
        self.u.add_edge(id, tail, head, cycle).expect("valid ends");
    }

    /// New L with `degree` slots, one of which is used by an edge of the
    /// given polarity that the caller adds.
    fn new_l(&mut self, polarity: Polarity) -> usize {
        let l = self.vertex(VertexKind::L);
        self.polarity[l] = Some(polarity);
        if self.rng.gen_bool(0.5) {
            self.open.push((l, polarity));
        }
        l
    }

    fn new_m(&mut self) -> Result<(usize, Vec<OrientedCycle>, Vec<OrientedCycle>)> {
        let n = if self.rng.gen_bool(0.5) { 4 } else { 6 };
        let seed = self.rng.gen();
        let mut g = random_admissible(n, seed)?;
        let idx = self.counts[3] + 1;
        g.set_name(format!("{}_M{idx}", self.u.name()));
        let table = NominalTable::build(&g).expect("admissible");
        let tu = two_colour_cycles(&g, &table, CycleKind::Tu);
        let st = two_colour_cycles(&g, &table, CycleKind::St);
        let m = self.vertex(VertexKind::M(g));
        Ok((m, tu, st))
    }

    fn orient(&mut self, c: OrientedCycle) -> OrientedCycle {
        if self.rng.gen_bool(0.5) {
            c.reversed()
        } else {
            c
        }
    }

    /// Attaches some of the free cycles of a new M to new L-vertices.
    fn spread_m(&mut self, m: usize, tu: Vec<OrientedCycle>, st: Vec<OrientedCycle>) {
        for c in tu {
            if self.budget > 0 && self.rng.gen_bool(0.4) {
                let l = self.new_l(Polarity::In);
                let c = self.orient(c);
                self.edge(m, l, Some(c));
            }
        }
        for c in st {
            if self.budget > 0 && self.rng.gen_bool(0.4) {
                let l = self.new_l(Polarity::Out);
                let c = self.orient(c);
                self.edge(l, m, Some(c));
            }
        }
    }

    fn fill(&mut self, l: usize, p: Polarity) -> Result<()> {
        let choice = if self.budget == 0 { 0 } else { self.rng.gen_range(0..4) };
        match choice {
            1 => {
                let w = if self.rng.gen_bool(0.5) {
                    Weight::Plus
                } else {
                    Weight::Minus
                };
                let e = self.vertex(VertexKind::E(w));
                let other = self.new_l(if p == Polarity::In { Polarity::Out } else { Polarity::In });
                match p {
                    Polarity::In => {
                        self.edge(other, e, None);
                        self.edge(e, l, None);
                    }
                    Polarity::Out => {
                        self.edge(l, e, None);
                        self.edge(e, other, None);
                    }
                }
            }
            2 => {
                let (m, mut tu, mut st) = self.new_m()?;
                match p {
                    Polarity::In => {
                        let c = tu.remove(self.rng.gen_range(0..tu.len()));
                        let c = self.orient(c);
                        self.edge(m, l, Some(c));
                    }
                    Polarity::Out => {
                        let c = st.remove(self.rng.gen_range(0..st.len()));
                        let c = self.orient(c);
                        self.edge(l, m, Some(c));
                    }
                }
                self.spread_m(m, tu, st);
            }
            _ => {
                let a = self.vertex(VertexKind::A);
                match p {
                    Polarity::In => self.edge(a, l, None),
                    Polarity::Out => self.edge(l, a, None),
                }
            }
        }
        Ok(())
    }
}

/// A random admissible equipped graph with a handful of vertices and small
/// four-colour graphs.
pub fn random_equipped(seed: u64) -> Result<EquippedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = rng.gen_range(1..=8);
    let mut b = EqBuilder {
        u: EquippedGraph::new(format!("EQ_{seed}")),
        rng,
        budget,
        counts: [0; 5],
        open: Vec::new(),
        polarity: Vec::new(),
    };
    if b.rng.gen_bool(0.5) {
        let (m, tu, st) = b.new_m()?;
        b.spread_m(m, tu, st);
    } else {
        let p = if b.rng.gen_bool(0.5) {
            Polarity::In
        } else {
            Polarity::Out
        };
        let l = b.vertex(VertexKind::L);
        b.polarity[l] = Some(p);
        b.open.push((l, p));
        if b.rng.gen_bool(0.5) {
            b.open.push((l, p));
        }
    }
    while let Some((l, p)) = b.open.pop() {
        // occasionally close a cycle through an E-vertex
        let partner = b.open.iter().position(|&(l2, p2)| l2 != l && p2 != p);
        if let (Some(i), true) = (partner, b.rng.gen_bool(0.3)) {
            let (l2, _) = b.open.remove(i);
            let w = if b.rng.gen_bool(0.5) {
                Weight::Plus
            } else {
                Weight::Minus
            };
            let e = b.vertex(VertexKind::E(w));
            let (from, to) = if p == Polarity::Out { (l, l2) } else { (l2, l) };
            b.edge(from, e, None);
            b.edge(e, to, None);
            continue;
        }
        b.fill(l, p)?;
    }
    let u = b.u;
    debug_assert!(
        crate::model::validate_equipped(&u).is_empty(),
        "{}",
        crate::model::validate_equipped(&u)
    );
    Ok(u)
}
