//! Unlabelled simple graphs and the subdivision gadgets that produce them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Undirected graph on `0..n` without loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
    edges: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![BTreeSet::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.adj.len() || b >= self.adj.len() {
            return Err(Error::NoSuchVertex(format!("#{}", a.max(b))));
        }
        if a == b {
            return Err(Error::NotSimple(format!("loop at {a}")));
        }
        if !self.adj[a].insert(b) {
            return Err(Error::NotSimple(format!("parallel edges {a}-{b}")));
        }
        self.adj[b].insert(a);
        self.edges += 1;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj.get(a).is_some_and(|s| s.contains(&b))
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edges);
        for (a, ns) in self.adj.iter().enumerate() {
            out.extend(ns.range(a + 1..).map(|&b| (a, b)));
        }
        out
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph> {
        SimpleGraph::from_edges(
            self.vertex_count(),
            self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])),
        )
    }

    /// Whether `v` lies on a triangle.
    pub fn in_triangle(&self, v: usize) -> bool {
        let ns: Vec<usize> = self.neighbours(v).collect();
        ns.iter()
            .enumerate()
            .any(|(i, &a)| ns[i + 1..].iter().any(|&b| self.has_edge(a, b)))
    }

    /// Number of degree-1 neighbours of `v`.
    pub fn pendant_count(&self, v: usize) -> usize {
        self.neighbours(v).filter(|&w| self.degree(w) == 1).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Undirected multigraph on `0..n`, the input side of the gadgets. Edges are
/// addressed by their position in `edges`; `(a, b)` order matters for the
/// asymmetric gadget.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        self.edges.push((a, b));
        self.edges.len() - 1
    }

    fn path(&mut self, from: usize, k: usize) -> usize {
        let mut last = from;
        for _ in 0..k {
            let c = self.add_vertex();
            self.edges.push((last, c));
            last = c;
        }
        last
    }

    /// Replaces edge `e` by a path through `k` new vertices. The first new
    /// edge takes the place of `e`.
    pub fn k_subdivide(&mut self, e: usize, k: usize) -> Result<()> {
        let (a, b) = *self.edges.get(e).ok_or_else(|| Error::NoSuchEdge(format!("#{e}")))?;
        if k == 0 {
            return Err(Error::InvalidArgument("subdivision needs k >= 1".into()));
        }
        let c1 = self.add_vertex();
        self.edges[e] = (a, c1);
        let last = self.path(c1, k - 1);
        self.edges.push((last, b));
        Ok(())
    }

    /// Replaces edge `e = (a, b)` by a path a–c1..c_{k1}–v, a triangle
    /// v–u–w, and a path v–d1..d_{k2}–b.
    pub fn k1k2_subdivide(&mut self, e: usize, k1: usize, k2: usize) -> Result<()> {
        let (a, b) = *self.edges.get(e).ok_or_else(|| Error::NoSuchEdge(format!("#{e}")))?;
        if k1 == 0 || k2 == 0 {
            return Err(Error::InvalidArgument("subdivision needs k1, k2 >= 1".into()));
        }
        let c1 = self.add_vertex();
        self.edges[e] = (a, c1);
        let ck = self.path(c1, k1 - 1);
        let v = self.add_vertex();
        self.edges.push((ck, v));
        let u = self.add_vertex();
        let w = self.add_vertex();
        self.edges.extend([(v, u), (u, w), (v, w)]);
        let dk = self.path(v, k2);
        self.edges.push((dk, b));
        Ok(())
    }

    pub fn to_simple(&self) -> Result<SimpleGraph> {
        SimpleGraph::from_edges(self.n, self.edges.iter().copied())
    }
}

impl From<&SimpleGraph> for Multigraph {
    fn from(g: &SimpleGraph) -> Self {
        Multigraph {
            n: g.vertex_count(),
            edges: g.edges(),
        }
    }
}
