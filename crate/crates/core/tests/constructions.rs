mod common;

use proptest::prelude::*;
use strong_odd_core::coloring::{is_strong_odd, Coloring};
use strong_odd_core::constructive::{
    c5_box_c5_table, color_cycle, color_direct_complete, color_tree, color_unicyclic, compose_lexicographic,
    compose_product_coloring, is_odd_tree, nordhaus_gaddum, NordhausGaddumKind,
};
use strong_odd_core::graph::{join, make_complete, make_cycle, make_path, make_star, Graph};
use strong_odd_core::product::{product, ProductKind};
use strong_odd_core::solver::oracle::brute_force_chi_so;
use strong_odd_core::solver::{chi_so_exact, Budget, Param, Solver};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trees(t in common::tree(1, 60)) {
        let c = color_tree(&t).unwrap();
        prop_assert!(is_strong_odd(&t, &c.coloring).unwrap().holds());
        let expected = if t.order() == 1 { 1 } else if is_odd_tree(&t) { 2 } else { 3 };
        prop_assert_eq!(c.coloring.distinct(), expected);
        prop_assert!(c.steps <= 3 * t.order() as u64);
    }

    #[test]
    fn unicyclic_graphs(g in common::unicyclic(3, 60)) {
        let c = color_unicyclic(&g).unwrap();
        prop_assert!(is_strong_odd(&g, &c.coloring).unwrap().holds());
        let bare_c5 = g.order() == 5 && (0..5).all(|v| g.degree(v) == 2);
        let cap = if bare_c5 { 5 } else { 4 };
        prop_assert!(c.coloring.distinct() <= cap);
        prop_assert!(c.steps <= 3 * g.order() as u64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn small_trees_are_optimal(t in common::tree(1, 9)) {
        let c = color_tree(&t).unwrap();
        prop_assert_eq!(c.coloring.distinct(), brute_force_chi_so(&t).unwrap());
    }

    #[test]
    fn small_unicyclic_bound(g in common::unicyclic(3, 9)) {
        let so = brute_force_chi_so(&g).unwrap();
        let bare_c5 = g.order() == 5 && g.max_degree() == 2;
        let cap = if bare_c5 { 5 } else { 4 };
        prop_assert!(so <= cap);
        prop_assert!(color_unicyclic(&g).unwrap().coloring.distinct() >= so);
    }
}

#[test]
fn cycle_formula_matches_oracle() {
    for n in 3..=9 {
        let c = color_cycle(n).unwrap();
        assert_eq!(c.coloring.distinct(), brute_force_chi_so(&make_cycle(n).unwrap()).unwrap(), "C_{n}");
    }
}

fn factors() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", make_complete(2).unwrap()),
        ("K3", make_complete(3).unwrap()),
        ("C5", make_cycle(5).unwrap()),
        ("C6", make_cycle(6).unwrap()),
        ("P4", make_path(4).unwrap()),
        ("K13", make_star(3).unwrap()),
    ]
}

#[test]
fn product_compositions() {
    let solver = Solver::new(Budget::default());
    for (gn, g) in factors() {
        let phi_g = solver.solve(&g, Param::StrongOdd).witness;
        for (hn, h) in factors() {
            let phi_h = solver.solve(&h, Param::StrongOdd).witness;
            for kind in [ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong] {
                let out = compose_product_coloring(&g, &phi_g, &h, &phi_h, kind).unwrap();
                let p = product(&g, &h, kind).unwrap();
                assert!(is_strong_odd(&p, &out.coloring).unwrap().holds(), "{gn} {} {hn}", kind.name());
                assert!(out.coloring.distinct() <= phi_g.distinct() * phi_h.distinct());
            }
            let apex_h = join(&Graph::empty(1), &h);
            let phi_apex = solver.solve(&apex_h, Param::StrongOdd).witness;
            let out = compose_lexicographic(&g, &phi_g, &h, &phi_apex).unwrap();
            let p = product(&g, &h, ProductKind::Lexicographic).unwrap();
            assert!(is_strong_odd(&p, &out.coloring).unwrap().holds(), "{gn} lex {hn}");
            assert!(out.coloring.distinct() <= phi_g.distinct() * (phi_apex.distinct() - 1));
        }
    }
}

#[test]
fn lexicographic_with_the_outerplanar_extremal_graph() {
    let k2 = make_complete(2).unwrap();
    let p6 = make_path(6).unwrap();
    let out = compose_lexicographic(&k2, &Coloring::rainbow(2), &p6, &Coloring::rainbow(7)).unwrap();
    assert!(out.coloring.distinct() <= 12);
    let p = product(&k2, &p6, ProductKind::Lexicographic).unwrap();
    assert!(is_strong_odd(&p, &out.coloring).unwrap().holds());

    let k1 = Graph::empty(1);
    let out = compose_lexicographic(&k1, &Coloring::rainbow(1), &p6, &Coloring::rainbow(7)).unwrap();
    assert!(is_strong_odd(&p6, &out.coloring).unwrap().holds());
}

#[test]
fn columns_never_repeat_a_color_for_odd_q() {
    let solver = Solver::new(Budget::default());
    for (p, q) in [(2, 3), (3, 3), (4, 3)] {
        let g = product(&make_complete(p).unwrap(), &make_complete(q).unwrap(), ProductKind::Direct).unwrap();
        let k = chi_so_exact(&g, &Budget::default()).value;
        let mut seen = 0;
        let complete = solver.enumerate(&Param::StrongOdd.problem(&g), k + 1, |phi| {
            seen += 1;
            for col in 0..p {
                let mut colors: Vec<usize> = (0..q).map(|h| phi.color(col * q + h)).collect();
                colors.sort_unstable();
                colors.dedup();
                assert_eq!(colors.len(), q, "K{p} x K{q}: column {col} repeats a color in {phi:?}");
            }
            true
        });
        assert!(complete && seen > 0);
    }
}

#[test]
fn direct_complete_table() {
    let b = Budget::default();
    for (p, q, value) in [(2, 2, 2), (2, 3, 3), (3, 3, 9), (2, 4, 2), (4, 3, 3), (4, 4, 4)] {
        let g = product(&make_complete(p).unwrap(), &make_complete(q).unwrap(), ProductKind::Direct).unwrap();
        let r = chi_so_exact(&g, &b);
        assert!(r.optimal);
        assert_eq!(r.value, value, "K{p} x K{q}");
        assert_eq!(color_direct_complete(p, q).unwrap().coloring.distinct(), value);
    }
}

#[test]
fn c5_square_table_and_nordhaus_gaddum() {
    let c5 = make_cycle(5).unwrap();
    let f = product(&c5, &c5, ProductKind::Cartesian).unwrap();
    assert!(is_strong_odd(&f, &c5_box_c5_table()).unwrap().holds());
    let b = Budget::default();
    for (kind, value) in [(NordhausGaddumKind::H1, 3), (NordhausGaddumKind::H2, 9)] {
        let ng = nordhaus_gaddum(1, kind).unwrap();
        assert_eq!(chi_so_exact(&ng.graph, &b).value, value);
        assert_eq!(chi_so_exact(&ng.complement, &b).value, value);
    }
}
