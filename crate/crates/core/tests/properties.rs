mod common;

use std::collections::BTreeSet;

use flowgraph::format::{parse_str, select, serialize, Graph};
use flowgraph::invariants::{
    census, cstar_cycles_by_edge_search, enumerate_cstar_cycles, euler_equipped, euler_four_colour,
    orientable_four_colour,
};
use flowgraph::iso::{
    direct_iso_equipped, direct_iso_four_colour, equipped_iso, equipped_iso_certificate, four_colour_iso,
    four_colour_iso_certificate, four_colour_vertex_map, is_four_colour_isomorphism, restore_equipped,
    restore_four_colour, simple_iso, size_bound, to_simple_equipped, to_simple_equipped_with_layout,
    to_simple_four_colour, SimpleGraph,
};
use flowgraph::model::{validate_equipped, validate_four_colour, Colour, VertexKind, Weight};
use flowgraph::realization::{
    complex_euler, complex_orientable, equipped_euler_oracle, glue, random_admissible, random_equipped,
    shuffled_equipped, shuffled_four_colour,
};
use petgraph::algo::{connected_components, is_isomorphic};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Even vertex counts in `lo..=hi`; the generator only builds even ones.
fn even(lo: usize, hi: usize) -> impl Strategy<Value = usize> {
    (lo / 2..=hi / 2).prop_map(|k| 2 * k)
}

fn pg_connected(g: &flowgraph::model::FourColourGraph) -> bool {
    let mut pg = petgraph::graph::UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for e in g.edges() {
        pg.add_edge(nodes[e.ends[0]], nodes[e.ends[1]], ());
    }
    connected_components(&pg) == 1
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn admissible_graphs_have_the_counting_structure(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        prop_assert!(validate_four_colour(&g).is_empty());
        prop_assert!(pg_connected(&g));
        prop_assert_eq!(g.vertex_count() % 2, 0);
        let corners: usize = (0..g.vertex_count()).map(|v| g.c_degree(v) + 1).sum();
        prop_assert_eq!(corners % 4, 0);
        for v in 0..g.vertex_count() {
            let mut idx: Vec<u32> = g
                .incident(v)
                .iter()
                .filter(|&&e| g.edge(e).colour != Colour::T)
                .map(|&e| g.nominal_index(v, e).unwrap())
                .collect();
            idx.sort_unstable();
            let want: Vec<u32> = (0..=g.c_degree(v) as u32 + 1).collect();
            prop_assert_eq!(idx, want);
        }
        for c in enumerate_cstar_cycles(&g).unwrap() {
            prop_assert_eq!(c.len(), 4);
            prop_assert_eq!(c.edges().collect::<BTreeSet<_>>().len(), 4);
            prop_assert!(c.is_closed_walk_in(&g));
        }
    }

    #[test]
    fn validation_is_pure(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let before = g.clone();
        let r1 = validate_four_colour(&g);
        let r2 = validate_four_colour(&g);
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(&g, &before);
        let broken = common::swap_colours(&g, Colour::S, Colour::T);
        prop_assert_eq!(validate_four_colour(&broken), validate_four_colour(&broken));
    }

    #[test]
    fn complex_matches_invariants(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let c = census(&g).unwrap();
        let cc = glue(&g).unwrap();
        prop_assert_eq!(cc.face_count(), g.vertex_count());
        prop_assert_eq!(cc.edge_count(), g.edge_count());
        prop_assert_eq!(cc.vertex_count(), c.nu0 + c.nu1 + c.nu2);
        prop_assert_eq!(complex_euler(&cc), euler_four_colour(&g).unwrap());
        prop_assert_eq!(complex_orientable(&cc), orientable_four_colour(&g).unwrap());
        prop_assert_eq!(c.euler(), euler_four_colour(&g).unwrap());
    }

    #[test]
    fn cstar_methods_agree(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let mut a = enumerate_cstar_cycles(&g).unwrap();
        let mut b = cstar_cycles_by_edge_search(&g).unwrap();
        a.sort_by_key(|c| c.darts().to_vec());
        b.sort_by_key(|c| c.darts().to_vec());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn gluing_ignores_labels(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let (h, _) = shuffled_four_colour(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        let (a, b) = (glue(&g).unwrap(), glue(&h).unwrap());
        prop_assert_eq!(
            (a.face_count(), a.edge_count(), a.vertex_count(), complex_orientable(&a)),
            (b.face_count(), b.edge_count(), b.vertex_count(), complex_orientable(&b))
        );
        let sizes = |cc: &flowgraph::realization::CellComplex| {
            let mut s: Vec<usize> = cc.faces.iter().map(|f| f.n).collect();
            s.sort_unstable();
            s
        };
        prop_assert_eq!(sizes(&a), sizes(&b));
    }

    #[test]
    fn relabelling_is_isomorphic(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let (h, _) = shuffled_four_colour(&g, &mut ChaCha8Rng::seed_from_u64(seed ^ 1));
        let cert = four_colour_iso_certificate(&g, &h).unwrap().expect("isomorphic");
        prop_assert!(cert.verify(&to_simple_four_colour(&g).unwrap(), &to_simple_four_colour(&h).unwrap()));
        prop_assert!(is_four_colour_isomorphism(&g, &h, &four_colour_vertex_map(&cert, &g)).unwrap());
        prop_assert!(direct_iso_four_colour(&g, &h).unwrap());
    }

    #[test]
    fn pipeline_agrees_with_oracle(n in even(4, 10), seed in any::<u64>(), which in 0usize..4) {
        let g = random_admissible(n, seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (h, _) = shuffled_four_colour(&g, &mut rng);
        let h = match which {
            0 => common::swap_colours(&h, Colour::S, Colour::U),
            1 => common::swap_colours(&h, Colour::T, Colour::S),
            2 => common::shuffle_c_order(&h, &mut rng).unwrap_or(h),
            _ => random_admissible(n, seed.wrapping_add(1)).unwrap(),
        };
        prop_assert_eq!(four_colour_iso(&g, &h).unwrap(), direct_iso_four_colour(&g, &h).unwrap());
    }

    #[test]
    fn four_colour_round_trip(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let sg = to_simple_four_colour(&g).unwrap();
        prop_assert!(sg.vertex_count() <= size_bound(&g));
        let back = restore_four_colour(&sg).unwrap();
        prop_assert!(direct_iso_four_colour(&g, &back).unwrap());
    }

    #[test]
    fn equipped_invariants(seed in any::<u64>()) {
        let u = random_equipped(seed).unwrap();
        prop_assert!(validate_equipped(&u).is_empty());
        prop_assert_eq!(equipped_euler_oracle(&u).unwrap(), euler_equipped(&u).unwrap());
    }

    #[test]
    fn equipped_reduction(seed in any::<u64>()) {
        let u = random_equipped(seed).unwrap();
        let (sg, layout) = to_simple_equipped_with_layout(&u).unwrap();
        // pendant signature on originals, at most one leaf elsewhere
        let leaves = |v: usize| sg.neighbours(v).filter(|&w| sg.degree(w) == 1).count();
        for v in 0..u.vertex_count() {
            let want = match u.kind(v) {
                VertexKind::A => 2,
                VertexKind::L => 3,
                VertexKind::E(Weight::Minus) => 4,
                VertexKind::E(Weight::Plus) => 5,
                VertexKind::M(_) => continue,
            };
            prop_assert_eq!(leaves(layout.vertex[v].unwrap()), want);
        }
        let originals: BTreeSet<usize> = layout.vertex.iter().flatten().copied().collect();
        for x in (0..sg.vertex_count()).filter(|x| !originals.contains(x)) {
            prop_assert!(leaves(x) <= 1);
        }
        let back = restore_equipped(&sg).unwrap();
        prop_assert!(direct_iso_equipped(&u, &back).unwrap());
    }

    #[test]
    fn equipped_relabelling_and_mutations(seed in any::<u64>()) {
        let u = random_equipped(seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (w, _) = shuffled_equipped(&u, &mut rng);
        let cert = equipped_iso_certificate(&u, &w).unwrap().expect("isomorphic");
        prop_assert!(cert.verify(&to_simple_equipped(&u).unwrap(), &to_simple_equipped(&w).unwrap()));
        prop_assert!(direct_iso_equipped(&u, &w).unwrap());
        for v in common::e_vertices(&w) {
            let f = common::flip_weight(&w, v);
            prop_assert!(!equipped_iso(&u, &f).unwrap());
            prop_assert!(!direct_iso_equipped(&u, &f).unwrap());
        }
        for e in common::tagged_edges(&w) {
            let r = common::reverse_tag(&w, e);
            prop_assert_eq!(equipped_iso(&u, &r).unwrap(), direct_iso_equipped(&u, &r).unwrap());
        }
    }

    #[test]
    fn text_round_trip(n in even(4, 12), seed in any::<u64>()) {
        let g = random_admissible(n, seed).unwrap();
        let (mut h, _) = shuffled_four_colour(&g, &mut ChaCha8Rng::seed_from_u64(seed));
        h.set_name(format!("{}_SHUFFLED", g.name()));
        let u = random_equipped(seed).unwrap();
        let graphs = vec![Graph::FourColour(g), Graph::FourColour(h), Graph::Equipped(u)];
        // embedded fcg blocks come back as graphs of their own
        let back = parse_str(&serialize(&graphs)).unwrap();
        for g in &graphs {
            prop_assert_eq!(select(&back, Some(g.name())).unwrap(), g);
        }
    }

    #[test]
    fn backend_agrees_with_petgraph(n in 1usize..=8, bits in any::<u64>(), perm_seed in any::<u64>(), tweak in any::<bool>()) {
        let mut edges = Vec::new();
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push((a, b));
                }
                k += 1;
            }
        }
        let g1 = SimpleGraph::from_edges(n, edges.iter().copied()).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut ChaCha8Rng::seed_from_u64(perm_seed));
        let mut g2 = g1.relabel(&perm).unwrap();
        if tweak && n >= 2 {
            // toggle one pair to get a usually non-isomorphic partner
            let mut es = g2.edges();
            match es.iter().position(|&e| e == (0, 1)) {
                Some(i) => { es.remove(i); }
                None => es.push((0, 1)),
            }
            g2 = SimpleGraph::from_edges(n, es).unwrap();
        }
        let ours = simple_iso(&g1, &g2);
        prop_assert_eq!(ours.is_some(), is_isomorphic(&common::to_petgraph(&g1), &common::to_petgraph(&g2)));
        if let Some(c) = ours {
            prop_assert!(c.verify(&g1, &g2));
        }
    }
}
