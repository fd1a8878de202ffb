//! Polygonal realization: one polygon per region, sides glued along the
//! edges of the four-colour graph.

use std::collections::VecDeque;
use std::fmt;

use super::union_find::UnionFind;
use crate::error::{Error, Result};
use crate::model::four_colour::NominalTable;
use crate::model::{
    require_admissible, require_admissible_equipped, require_well_formed, EquippedGraph, FourColourGraph, VertexKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideLabel {
    T,
    /// Nominal index: 0 is the u-side, n_b + 1 the s-side.
    Nominal(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Side {
    pub label: SideLabel,
    pub edge: usize,
    /// Corners (0-based, A1 is 0) in flow direction: from the source-side
    /// end to the sink-side end.
    pub from: usize,
    pub to: usize,
}

impl Side {
    /// +1 if `from -> to` follows the boundary order A1 A2 ... An A1.
    fn sign(&self, n: usize) -> i8 {
        if (self.from + 1) % n == self.to {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledPolygon {
    pub owner: usize,
    /// Number of sides, 3 + n_b.
    pub n: usize,
    /// In the order t, u, c_1, ..., c_{n_b}, s.
    pub sides: Vec<Side>,
}

impl LabelledPolygon {
    pub fn label_name(&self, i: usize) -> String {
        let last = self.n as u32 - 2;
        match self.sides[i].label {
            SideLabel::T => "t".into(),
            SideLabel::Nominal(0) => "u".into(),
            SideLabel::Nominal(j) if j == last => "s".into(),
            SideLabel::Nominal(j) => format!("c{j}"),
        }
    }
}

fn polygon(table: &NominalTable, b: usize) -> LabelledPolygon {
    let nb = table.n(b) as usize;
    let n = 3 + nb;
    // corners A1..An are 0..n-1
    let mut sides = Vec::with_capacity(n);
    sides.push(Side {
        label: SideLabel::T,
        edge: table.t_edge[b],
        from: 0,
        to: n - 1,
    });
    sides.push(Side {
        label: SideLabel::Nominal(0),
        edge: table.at(b, 0),
        from: n - 2,
        to: n - 1,
    });
    for j in 1..=nb {
        sides.push(Side {
            label: SideLabel::Nominal(j as u32),
            edge: table.at(b, j as u32),
            from: n - j - 2,
            to: n - j - 1,
        });
    }
    sides.push(Side {
        label: SideLabel::Nominal(nb as u32 + 1),
        edge: table.at(b, nb as u32 + 1),
        from: 0,
        to: 1,
    });
    LabelledPolygon { owner: b, n, sides }
}

pub fn build_polygon(g: &FourColourGraph, b: &str) -> Result<LabelledPolygon> {
    let v = g.vertex(b).ok_or_else(|| Error::NoSuchVertex(b.into()))?;
    let table = require_well_formed(g)?;
    Ok(polygon(&table, v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    pub faces: Vec<LabelledPolygon>,
    /// For each edge of the graph, the two (face, side) pairs it identifies.
    pub edge_classes: Vec<[(usize, usize); 2]>,
    /// Vertex class of each corner, indexed by face then corner.
    pub corner_class: Vec<Vec<usize>>,
    pub vertex_classes: usize,
}

impl CellComplex {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_classes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_classes
    }
}

impl fmt::Display for CellComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F={} E={} V={}",
            self.face_count(),
            self.edge_count(),
            self.vertex_count()
        )
    }
}

pub fn glue(g: &FourColourGraph) -> Result<CellComplex> {
    let table = require_admissible(g)?;
    Ok(glue_unchecked(g, &table))
}

pub(crate) fn glue_unchecked(g: &FourColourGraph, table: &NominalTable) -> CellComplex {
    let faces: Vec<LabelledPolygon> = (0..g.vertex_count()).map(|b| polygon(table, b)).collect();
    let mut offset = Vec::with_capacity(faces.len());
    let mut total = 0;
    for f in &faces {
        offset.push(total);
        total += f.n;
    }
    let mut placed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.edge_count()];
    for (fi, f) in faces.iter().enumerate() {
        for (si, s) in f.sides.iter().enumerate() {
            placed[s.edge].push((fi, si));
        }
    }
    let mut uf = UnionFind::new(total);
    let mut edge_classes = Vec::with_capacity(g.edge_count());
    for pair in placed {
        let [(f1, s1), (f2, s2)] = [pair[0], pair[1]];
        let (a, b) = (&faces[f1].sides[s1], &faces[f2].sides[s2]);
        uf.union(offset[f1] + a.from, offset[f2] + b.from);
        uf.union(offset[f1] + a.to, offset[f2] + b.to);
        edge_classes.push([(f1, s1), (f2, s2)]);
    }
    let (classes, vertex_classes) = uf.classes();
    let corner_class = faces
        .iter()
        .enumerate()
        .map(|(fi, f)| (0..f.n).map(|k| classes[offset[fi] + k]).collect())
        .collect();
    CellComplex {
        faces,
        edge_classes,
        corner_class,
        vertex_classes,
    }
}

/// V − E + F.
pub fn complex_euler(cc: &CellComplex) -> i64 {
    cc.vertex_count() as i64 - cc.edge_count() as i64 + cc.face_count() as i64
}

/// Looks for signs on the faces such that every glued pair of sides is
/// traversed in opposite directions by the induced boundary orientations.
pub fn complex_orientable(cc: &CellComplex) -> bool {
    // constraint per edge: sign(f1) * sign(f2) == -d1 * d2
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); cc.faces.len()];
    for &[(f1, s1), (f2, s2)] in &cc.edge_classes {
        let d1 = cc.faces[f1].sides[s1].sign(cc.faces[f1].n);
        let d2 = cc.faces[f2].sides[s2].sign(cc.faces[f2].n);
        let rel = -d1 * d2;
        adj[f1].push((f2, rel));
        adj[f2].push((f1, rel));
    }
    let mut sign: Vec<i8> = vec![0; cc.faces.len()];
    let mut queue = VecDeque::new();
    for s in 0..cc.faces.len() {
        if sign[s] != 0 {
            continue;
        }
        sign[s] = 1;
        queue.push_back(s);
        while let Some(f) = queue.pop_front() {
            for &(h, rel) in &adj[f] {
                let want = sign[f] * rel;
                if sign[h] == 0 {
                    sign[h] = want;
                    queue.push_back(h);
                } else if sign[h] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// χ of the surface assembled from the glued region complexes: each M
/// contributes χ(glue(Γ_M)) minus one per removed boundary disk, each A a
/// disk, and L/E annuli or Möbius bands nothing.
pub fn equipped_euler_oracle(u: &EquippedGraph) -> Result<i64> {
    require_admissible_equipped(u)?;
    let mut chi = 0;
    for v in 0..u.vertex_count() {
        match u.kind(v) {
            VertexKind::M(g) => chi += complex_euler(&glue(g)?) - u.degree(v) as i64,
            VertexKind::A => chi += 1,
            VertexKind::L | VertexKind::E(_) => {}
        }
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::Colour;

    #[test]
    fn sphere4_triangle() {
        let g = fixtures::sphere4();
        let p = build_polygon(&g, "1").unwrap();
        assert_eq!(p.n, 3);
        let labels: Vec<String> = (0..3).map(|i| p.label_name(i)).collect();
        assert_eq!(labels, ["t", "u", "s"]);
        assert!(matches!(build_polygon(&g, "9"), Err(Error::NoSuchVertex(_))));
    }

    #[test]
    fn pentagon_side_order() {
        let mut g = FourColourGraph::new("p");
        let a = g.add_vertex("a").unwrap();
        let b = g.add_vertex("b").unwrap();
        g.add_edge("t", Colour::T, a, b).unwrap();
        g.add_edge("u", Colour::U, a, b).unwrap();
        g.add_edge("s", Colour::S, a, b).unwrap();
        g.add_c_edge("c1", a, 1, b, 2).unwrap();
        g.add_c_edge("c2", a, 2, b, 1).unwrap();
        let p = build_polygon(&g, "a").unwrap();
        let labels: Vec<String> = (0..p.n).map(|i| p.label_name(i)).collect();
        assert_eq!(labels, ["t", "u", "c1", "c2", "s"]);
        // sides chain A1 -> A2 -> ... -> A5 in flow direction, t runs across
        let spans: Vec<(usize, usize)> = p.sides.iter().map(|s| (s.from, s.to)).collect();
        assert_eq!(spans, [(0, 4), (3, 4), (2, 3), (1, 2), (0, 1)]);
    }

    #[test]
    fn sphere4_complex() {
        let cc = glue(&fixtures::sphere4()).unwrap();
        assert_eq!((cc.face_count(), cc.edge_count(), cc.vertex_count()), (4, 6, 4));
        assert_eq!(complex_euler(&cc), 2);
        assert!(complex_orientable(&cc));
    }

    #[test]
    fn equipped_oracle_on_fixtures() {
        assert_eq!(equipped_euler_oracle(&fixtures::proj_al()).unwrap(), 1);
        assert_eq!(equipped_euler_oracle(&fixtures::sphere_mla()).unwrap(), 2);
        assert_eq!(equipped_euler_oracle(&fixtures::torus_ll()).unwrap(), 0);
        assert_eq!(equipped_euler_oracle(&fixtures::sphere_cyc()).unwrap(), 2);
    }

    #[test]
    fn rewired_is_not_glued() {
        assert!(matches!(
            glue(&fixtures::sphere4_rewired()),
            Err(Error::NotAdmissible(_))
        ));
    }
}
