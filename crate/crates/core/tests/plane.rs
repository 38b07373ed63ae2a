mod common;

use proptest::prelude::*;
use strong_odd_core::coloring::{is_proper, is_strong_odd, Coloring};
use strong_odd_core::plane::{
    augment_claim2_with, check_annihilation, check_claim1, chi_fo_exact, chi_pfo_exact, claim1_targets,
    decompose_claim1, fixtures, is_proper_facially_odd, strong_odd_via_planar, PlaneMultigraph,
};
use strong_odd_core::solver::{chi_exact, Budget, Solver};

fn proper_coloring(m: &PlaneMultigraph) -> Coloring {
    chi_exact(&m.underlying_graph(), &Budget::default()).witness
}

fn simple_neighbourhood(m: &PlaneMultigraph, v: usize) -> bool {
    let mut nb = m.rotation_neighbors(v);
    nb.sort_unstable();
    nb.windows(2).all(|p| p[0] != p[1])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn annihilation_rewrites_faces(m in common::embedded_planar(10, 12)) {
        for v in 0..m.order() {
            if m.degree(v) < 2 || !simple_neighbourhood(&m, v) {
                continue;
            }
            let a = m.annihilate_traced(v).unwrap();
            prop_assert!(check_annihilation(&m, v, &a).is_ok());
            prop_assert!(a.map.satisfies_euler());
            prop_assert_eq!(a.map.size(), m.size());
            prop_assert_eq!(a.map.order(), m.order() - 1);
            prop_assert_eq!(a.map.trace_faces().len(), m.trace_faces().len() + 1);
        }
    }

    #[test]
    fn color_class_decomposition(m in common::embedded_planar(10, 12)) {
        let phi = proper_coloring(&m);
        let classes = decompose_claim1(&m, &phi).unwrap();
        let mut seen = vec![false; m.order()];
        for class in &classes {
            check_claim1(&m, &phi, class).unwrap();
            for &v in &class.original {
                prop_assert!(!seen[v]);
                seen[v] = true;
            }
            // classes are independent in the input graph
            let g = m.underlying_graph();
            for (i, &u) in class.original.iter().enumerate() {
                for &w in &class.original[i + 1..] {
                    prop_assert!(!g.has_edge(u, w));
                }
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn augmentation_reaches_two_connectivity(m in common::embedded_planar(10, 12)) {
        let phi = proper_coloring(&m);
        for class in decompose_claim1(&m, &phi).unwrap() {
            if class.order() < 3 {
                continue;
            }
            let targets = claim1_targets(&m, &class);
            let hat = augment_claim2_with(&class.map, &targets).unwrap();
            prop_assert!(hat.is_biconnected());
            prop_assert!(hat.satisfies_euler());
            let faces = hat.trace_faces();
            for t in &targets {
                prop_assert!(faces.has_vertex_set(t));
            }
        }
    }

    #[test]
    fn pipeline_on_random_plane_graphs(m in common::embedded_planar(11, 10)) {
        let phi = proper_coloring(&m);
        let solver = Solver::new(Budget::default());
        let out = strong_odd_via_planar(&m, &phi, &solver).unwrap();
        let g = m.underlying_graph();
        prop_assert!(is_strong_odd(&g, &out.coloring).unwrap().holds());
        let k = phi.distinct();
        let worst = out.classes.iter().map(|c| c.colors).max().unwrap_or(0);
        let used = out.coloring.distinct();
        prop_assert!(used <= k * worst);
        prop_assert_eq!(used, out.classes.iter().map(|c| c.colors).sum::<usize>());
    }
}

#[test]
fn digon_reduction_on_fixtures() {
    let solver = Solver::new(Budget::default());
    let (bipyramid, _) = fixtures::hexagonal_bipyramid();
    for m in [fixtures::wheel(5), fixtures::wheel(6), bipyramid] {
        let fo = chi_fo_exact(&m.digon_expand(), &solver).unwrap();
        let pfo = chi_pfo_exact(&m, &solver).unwrap();
        assert_eq!(fo.value, pfo.value);
        assert!(is_proper_facially_odd(&m, &fo.witness).unwrap().holds());
    }
}

#[test]
fn bipyramid_pipeline() {
    let (m, phi) = fixtures::hexagonal_bipyramid();
    assert!(is_proper(&m.underlying_graph(), &phi).unwrap().holds());
    let out = strong_odd_via_planar(&m, &phi, &Solver::new(Budget::default())).unwrap();
    assert!(is_strong_odd(&m.underlying_graph(), &out.coloring).unwrap().holds());
    assert_eq!(out.classes.len(), 3);
}

#[test]
fn chord_through_shared_vertex() {
    let m = fixtures::pentagon_triangle();
    let hat = strong_odd_core::plane::augment_claim2(&m);
    // the chosen chord separates the shared vertex
    let hat = hat.unwrap();
    assert!(hat.is_biconnected());
    assert_eq!(hat.rotation_signature(), fixtures::pentagon_triangle_chorded().rotation_signature());
}
