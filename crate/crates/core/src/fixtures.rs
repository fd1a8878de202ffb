//! Small reference graphs, built in code. The same graphs ship in
//! `data/fixtures.eg`.

use crate::model::{Colour, EquippedGraph, FourColourGraph, OrientedCycle, VertexKind, Weight};

/// Sphere flow with one source, one saddle and two sinks.
pub fn sphere4() -> FourColourGraph {
    let mut g = FourColourGraph::new("SPHERE4");
    for v in ["1", "2", "3", "4"] {
        g.add_vertex(v).unwrap();
    }
    for (id, c, a, b) in [
        ("t12", Colour::T, 0, 1),
        ("u12", Colour::U, 0, 1),
        ("t34", Colour::T, 2, 3),
        ("u34", Colour::U, 2, 3),
        ("s13", Colour::S, 0, 2),
        ("s24", Colour::S, 1, 3),
    ] {
        g.add_edge(id, c, a, b).unwrap();
    }
    g
}

/// SPHERE4 with its s-edges replaced by s(1,2) and s(3,4).
pub fn sphere4_rewired() -> FourColourGraph {
    let mut g = FourColourGraph::new("SPHERE4_REWIRED");
    for v in ["1", "2", "3", "4"] {
        g.add_vertex(v).unwrap();
    }
    for (id, c, a, b) in [
        ("t12", Colour::T, 0, 1),
        ("u12", Colour::U, 0, 1),
        ("t34", Colour::T, 2, 3),
        ("u34", Colour::U, 2, 3),
        ("s12", Colour::S, 0, 1),
        ("s34", Colour::S, 2, 3),
    ] {
        g.add_edge(id, c, a, b).unwrap();
    }
    g
}

/// SPHERE4 with s(1,3), s(2,4) replaced by s(1,4), s(2,3).
pub fn sphere4_crossed() -> FourColourGraph {
    let mut g = FourColourGraph::new("SPHERE4_CROSSED");
    for v in ["1", "2", "3", "4"] {
        g.add_vertex(v).unwrap();
    }
    for (id, c, a, b) in [
        ("t12", Colour::T, 0, 1),
        ("u12", Colour::U, 0, 1),
        ("t34", Colour::T, 2, 3),
        ("u34", Colour::U, 2, 3),
        ("s14", Colour::S, 0, 3),
        ("s23", Colour::S, 1, 2),
    ] {
        g.add_edge(id, c, a, b).unwrap();
    }
    g
}

/// Four regions with two saddle connections and no symmetry that reverses
/// the tu-cycle (1 t2 3 u1).
pub fn asym4() -> FourColourGraph {
    let mut g = FourColourGraph::new("ASYM4");
    for v in ["1", "2", "3", "4"] {
        g.add_vertex(v).unwrap();
    }
    for (id, c, a, b) in [
        ("u1", Colour::U, 2, 0),
        ("s1", Colour::S, 1, 3),
        ("t1", Colour::T, 1, 3),
        ("u2", Colour::U, 1, 3),
        ("s2", Colour::S, 0, 2),
        ("t2", Colour::T, 0, 2),
    ] {
        g.add_edge(id, c, a, b).unwrap();
    }
    g.add_c_edge("c1", 2, 1, 1, 2).unwrap();
    g.add_c_edge("c2", 1, 1, 2, 2).unwrap();
    g
}

fn eqg(name: &str, vertices: &[(&str, VertexKind)], edges: &[(&str, &str, &str)]) -> EquippedGraph {
    let mut u = EquippedGraph::new(name);
    for (id, kind) in vertices {
        u.add_vertex(*id, kind.clone()).unwrap();
    }
    for (id, t, h) in edges {
        let t = u.vertex_by_id(t).unwrap();
        let h = u.vertex_by_id(h).unwrap();
        u.add_edge(*id, t, h, None).unwrap();
    }
    u
}

/// Projective plane: a disk glued to a Möbius band.
pub fn proj_al() -> EquippedGraph {
    eqg(
        "PROJ_AL",
        &[("a1", VertexKind::A), ("l1", VertexKind::L)],
        &[("x1", "a1", "l1")],
    )
}

pub fn sphere_cyc() -> EquippedGraph {
    eqg(
        "SPHERE_CYC",
        &[("a1", VertexKind::A), ("a2", VertexKind::A), ("l1", VertexKind::L)],
        &[("x1", "a1", "l1"), ("x2", "a2", "l1")],
    )
}

pub fn torus_ll() -> EquippedGraph {
    let plus = VertexKind::E(Weight::Plus);
    eqg(
        "TORUS_LL",
        &[
            ("l1", VertexKind::L),
            ("l2", VertexKind::L),
            ("e1", plus.clone()),
            ("e2", plus),
        ],
        &[
            ("x1", "l1", "e1"),
            ("x2", "e1", "l2"),
            ("x3", "l1", "e2"),
            ("x4", "e2", "l2"),
        ],
    )
}

/// TORUS_LL with both edges of e1 pointing into e1.
pub fn torus_ll_e1_entered_twice() -> EquippedGraph {
    let plus = VertexKind::E(Weight::Plus);
    eqg(
        "TORUS_LL_BAD",
        &[
            ("l1", VertexKind::L),
            ("l2", VertexKind::L),
            ("e1", plus.clone()),
            ("e2", plus),
        ],
        &[
            ("x1", "l1", "e1"),
            ("x2", "l2", "e1"),
            ("x3", "l1", "e2"),
            ("x4", "e2", "l2"),
        ],
    )
}

pub fn sphere_mla() -> EquippedGraph {
    let g = sphere4();
    let tag = OrientedCycle::from_ids(&g, &[("3", "t34"), ("4", "u34")]).unwrap();
    let mut u = eqg(
        "SPHERE_MLA",
        &[("a1", VertexKind::A), ("l1", VertexKind::L), ("m1", VertexKind::M(g))],
        &[("x1", "a1", "l1")],
    );
    let (m, l) = (u.vertex_by_id("m1").unwrap(), u.vertex_by_id("l1").unwrap());
    u.add_edge("x2", m, l, Some(tag)).unwrap();
    u
}

/// SPHERE_MLA with ASYM4 in place of SPHERE4.
pub fn asym_mla() -> EquippedGraph {
    let g = asym4();
    let tag = OrientedCycle::from_ids(&g, &[("1", "t2"), ("3", "u1")]).unwrap();
    let mut u = eqg(
        "ASYM_MLA",
        &[("a1", VertexKind::A), ("l1", VertexKind::L), ("m1", VertexKind::M(g))],
        &[("x1", "a1", "l1")],
    );
    let (m, l) = (u.vertex_by_id("m1").unwrap(), u.vertex_by_id("l1").unwrap());
    u.add_edge("x2", m, l, Some(tag)).unwrap();
    u
}

pub fn equipped_all() -> Vec<EquippedGraph> {
    vec![proj_al(), sphere_cyc(), torus_ll(), sphere_mla()]
}

/// Equipped fixture by name; panics on unknown names.
pub fn equipped(name: &str) -> EquippedGraph {
    equipped_all()
        .into_iter()
        .find(|u| u.name() == name)
        .unwrap_or_else(|| panic!("no fixture {name}"))
}
