use std::collections::VecDeque;
use std::fmt;

use super::cycles::census_unchecked;
use crate::error::{Error, Result};
use crate::model::{require_admissible, require_admissible_equipped, EquippedGraph, FourColourGraph, VertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceType {
    pub chi: i64,
    pub orientable: bool,
    /// Handle count when orientable, cross-cap count otherwise.
    pub genus: u64,
}

impl SurfaceType {
    pub fn name(&self) -> String {
        match (self.orientable, self.genus) {
            (true, 0) => "sphere".into(),
            (true, 1) => "torus".into(),
            (true, g) => format!("orientable surface of genus {g}"),
            (false, 1) => "projective plane".into(),
            (false, 2) => "Klein bottle".into(),
            (false, k) => format!("non-orientable surface with {k} cross-caps"),
        }
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn surface_type(chi: i64, orientable: bool) -> Result<SurfaceType> {
    let bad = Error::InconsistentPair { chi, orientable };
    let genus = if orientable {
        if chi > 2 || chi.rem_euclid(2) != 0 {
            return Err(bad);
        }
        (2 - chi) / 2
    } else {
        if chi > 1 {
            return Err(bad);
        }
        2 - chi
    };
    Ok(SurfaceType {
        chi,
        orientable,
        genus: genus as u64,
    })
}

/// ν0 − ν1 + ν2.
pub fn euler_four_colour(g: &FourColourGraph) -> Result<i64> {
    let table = require_admissible(g)?;
    Ok(census_unchecked(g, &table).euler())
}

/// Whether the colour-blind multigraph has no odd cycle. Every edge is
/// 2-subdivided first, which removes parallel edges while keeping cycle
/// parity, and the result is 2-coloured by breadth-first search.
pub fn orientable_four_colour(g: &FourColourGraph) -> Result<bool> {
    require_admissible(g)?;
    Ok(orientable_unchecked(g))
}

pub(crate) fn orientable_unchecked(g: &FourColourGraph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 2 * m];
    for (e, edge) in g.edges().iter().enumerate() {
        let (x, y) = (n + 2 * e, n + 2 * e + 1);
        let [a, b] = edge.ends;
        for (p, q) in [(a, x), (x, y), (y, b)] {
            adj[p].push(q);
            adj[q].push(p);
        }
    }
    is_bipartite(&adj)
}

pub(crate) fn is_bipartite(adj: &[Vec<usize>]) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; adj.len()];
    let mut queue = VecDeque::new();
    for s in 0..adj.len() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let sv = side[v].expect("queued vertices are coloured");
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Σ_M (X_M − deg M) + N_A.
pub fn euler_equipped(u: &EquippedGraph) -> Result<i64> {
    require_admissible_equipped(u)?;
    let mut chi = 0;
    for v in 0..u.vertex_count() {
        match u.kind(v) {
            VertexKind::M(g) => chi += euler_four_colour(g)? - u.degree(v) as i64,
            VertexKind::A => chi += 1,
            _ => {}
        }
    }
    Ok(chi)
}

/// Every four-colour graph bipartite and every L-vertex of degree 2.
/// E-weights play no part.
pub fn orientable_equipped(u: &EquippedGraph) -> Result<bool> {
    require_admissible_equipped(u)?;
    for v in 0..u.vertex_count() {
        match u.kind(v) {
            VertexKind::M(g) if !orientable_unchecked(g) => return Ok(false),
            VertexKind::L if u.degree(v) != 2 => return Ok(false),
            _ => {}
        }
    }
    Ok(true)
}

pub fn surface_type_four_colour(g: &FourColourGraph) -> Result<SurfaceType> {
    surface_type(euler_four_colour(g)?, orientable_four_colour(g)?)
}

pub fn surface_type_equipped(u: &EquippedGraph) -> Result<SurfaceType> {
    surface_type(euler_equipped(u)?, orientable_equipped(u)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn surface_types() {
        let s = surface_type(2, true).unwrap();
        assert_eq!((s.genus, s.name().as_str()), (0, "sphere"));
        let k = surface_type(0, false).unwrap();
        assert_eq!((k.genus, k.name().as_str()), (2, "Klein bottle"));
        assert_eq!(
            surface_type(1, true),
            Err(Error::InconsistentPair {
                chi: 1,
                orientable: true
            })
        );
        assert!(surface_type(4, true).is_err());
        assert!(surface_type(2, false).is_err());
        assert_eq!(surface_type(-2, true).unwrap().genus, 2);
    }

    #[test]
    fn sphere4() {
        let g = fixtures::sphere4();
        assert_eq!(euler_four_colour(&g).unwrap(), 2);
        assert!(orientable_four_colour(&g).unwrap());
    }

    #[test]
    fn sphere4_two_colouring_is_1_4_versus_2_3() {
        // the bipartition {1,4} / {2,3} makes every edge cross
        let g = fixtures::sphere4();
        let side = |id: &str| matches!(id, "1" | "4");
        for e in g.edges() {
            assert_ne!(side(g.vertex_id(e.ends[0])), side(g.vertex_id(e.ends[1])), "{}", e.id);
        }
    }

    #[test]
    fn equipped_fixtures() {
        let want = [
            ("PROJ_AL", 1, false),
            ("SPHERE_CYC", 2, true),
            ("TORUS_LL", 0, true),
            ("SPHERE_MLA", 2, true),
        ];
        for (name, chi, orientable) in want {
            let u = fixtures::equipped(name);
            assert_eq!(euler_equipped(&u).unwrap(), chi, "{name}");
            assert_eq!(orientable_equipped(&u).unwrap(), orientable, "{name}");
        }
        assert_eq!(surface_type_equipped(&fixtures::proj_al()).unwrap().genus, 1);
        assert_eq!(surface_type_equipped(&fixtures::torus_ll()).unwrap().genus, 1);
    }

    #[test]
    fn odd_cycle_detection() {
        let triangle = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        assert!(!is_bipartite(&triangle));
        let square = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
        assert!(is_bipartite(&square));
    }
}
