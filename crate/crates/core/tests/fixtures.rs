use std::collections::BTreeSet;

use flowgraph::fixtures;
use flowgraph::format::{parse_file, Graph};
use flowgraph::invariants::{
    census, euler_equipped, orientable_equipped, orientable_four_colour, surface_type_equipped,
};
use flowgraph::iso::{direct_iso_equipped, equipped_iso, to_simple_equipped, to_simple_four_colour};
use flowgraph::model::{validate_equipped, validate_four_colour, ViolationCode};
use flowgraph::realization::{complex_euler, equipped_euler_oracle, glue};

fn data(name: &str) -> Vec<Graph> {
    parse_file(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn shipped_file_matches_code() {
    let graphs = data("fixtures.eg");
    let names: Vec<&str> = graphs.iter().map(Graph::name).collect();
    assert_eq!(names, ["SPHERE4", "PROJ_AL", "SPHERE_CYC", "TORUS_LL", "SPHERE_MLA"]);
    assert_eq!(graphs[0], Graph::FourColour(fixtures::sphere4()));
    for (g, u) in graphs[1..].iter().zip(fixtures::equipped_all()) {
        assert_eq!(*g, Graph::Equipped(u));
    }
    let extra = data("extra.eg");
    assert_eq!(
        extra,
        [
            Graph::FourColour(fixtures::asym4()),
            Graph::Equipped(fixtures::asym_mla())
        ]
    );
}

#[test]
fn sphere4_counts() {
    // two sinks (tu-cycles 1-2 and 3-4), one saddle, one source
    let g = fixtures::sphere4();
    let c = census(&g).unwrap();
    assert_eq!((c.nu0, c.nu1, c.nu2), (2, 1, 1));
    assert_eq!(c.euler(), 2);
    assert!(orientable_four_colour(&g).unwrap());
    let cc = glue(&g).unwrap();
    assert_eq!((cc.face_count(), cc.edge_count(), cc.vertex_count()), (4, 6, 4));
    assert_eq!(complex_euler(&cc), 2);
}

#[test]
fn equipped_surfaces() {
    // (name, chi, orientable, genus)
    let expected = [
        ("PROJ_AL", 1, false, 1),
        ("SPHERE_CYC", 2, true, 0),
        ("SPHERE_MLA", 2, true, 0),
        ("TORUS_LL", 0, true, 1),
    ];
    for (name, chi, orientable, genus) in expected {
        let u = fixtures::equipped(name);
        assert_eq!(euler_equipped(&u).unwrap(), chi, "{name}");
        assert_eq!(equipped_euler_oracle(&u).unwrap(), chi, "{name}");
        assert_eq!(orientable_equipped(&u).unwrap(), orientable, "{name}");
        assert_eq!(surface_type_equipped(&u).unwrap().genus, genus, "{name}");
    }
}

#[test]
fn fixtures_are_admissible() {
    assert!(validate_four_colour(&fixtures::sphere4()).is_empty());
    assert!(validate_four_colour(&fixtures::asym4()).is_empty());
    for u in fixtures::equipped_all().into_iter().chain([fixtures::asym_mla()]) {
        assert!(validate_equipped(&u).is_empty(), "{}", u.name());
    }
}

#[test]
fn e1_entered_twice() {
    let report = validate_equipped(&fixtures::torus_ll_e1_entered_twice());
    let want: BTreeSet<ViolationCode> = [ViolationCode::EBadOrientation, ViolationCode::LMixedOrientation].into();
    assert_eq!(report.code_set(), want);
}

#[test]
fn reduction_sizes() {
    // 4 originals + 1·2 (s) + 2·2 (t) + 3·2 (u)
    assert_eq!(to_simple_four_colour(&fixtures::sphere4()).unwrap().vertex_count(), 16);
    // 4 originals, 3+3+5+5 pendants, four (2,1) gadgets of 6 vertices
    assert_eq!(to_simple_equipped(&fixtures::torus_ll()).unwrap().vertex_count(), 44);
}

#[test]
fn tag_reversal() {
    // SPHERE4 has the automorphism (1 2)(3 4), which carries the walk
    // 3 t34 4 u34 onto 4 t34 3 u34, so reversing that tag changes nothing
    let u = fixtures::sphere_mla();
    let mut r = u.clone();
    let e = r.edge_by_id("x2").unwrap();
    r.set_cycle(e, r.edge(e).cycle.as_ref().map(|c| c.reversed()));
    assert!(direct_iso_equipped(&u, &r).unwrap());
    assert!(equipped_iso(&u, &r).unwrap());

    let u = fixtures::asym_mla();
    let mut r = u.clone();
    r.set_cycle(e, r.edge(e).cycle.as_ref().map(|c| c.reversed()));
    assert!(!direct_iso_equipped(&u, &r).unwrap());
    assert!(!equipped_iso(&u, &r).unwrap());
}
