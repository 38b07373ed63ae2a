mod common;

use proptest::prelude::*;
use strong_odd_core::coloring::{is_odd, is_proper, is_square_coloring, is_strong_odd, verify_all, Coloring};
use strong_odd_core::graph::{line_graph, square};

proptest! {
    #[test]
    fn verdict_chain((g, phi) in common::graph_with_coloring(9, 5)) {
        let v = verify_all(&g, &phi).unwrap();
        if v.square.holds() { prop_assert!(v.strong_odd.holds()); }
        if v.strong_odd.holds() { prop_assert!(v.odd.holds()); }
        if v.odd.holds() { prop_assert!(v.proper.holds()); }
        prop_assert_eq!(v.square.holds(), is_proper(&square(&g), &phi).unwrap().holds());
    }

    #[test]
    fn strong_odd_ignores_color_names((g, phi) in common::graph_with_coloring(9, 4), shift in 1usize..7) {
        let k = phi.k().max(1);
        let permuted = Coloring::new(phi.colors().iter().map(|&c| (c + shift) % k * 3 + 1).collect());
        prop_assert_eq!(
            is_strong_odd(&g, &phi).unwrap().holds(),
            is_strong_odd(&g, &permuted).unwrap().holds()
        );
        prop_assert_eq!(is_odd(&g, &phi).unwrap().holds(), is_odd(&g, &permuted).unwrap().holds());
        prop_assert!(is_strong_odd(&g, &Coloring::rainbow(g.order())).unwrap().holds());
    }

    #[test]
    fn claw_free_strong_odd_is_square(base in common::graph(2, 6), colors in proptest::collection::vec(0usize..4, 15)) {
        let g = line_graph(&base);
        prop_assume!(g.order() >= 1 && g.order() <= 9);
        prop_assert!(g.is_claw_free());
        let phi = Coloring::new(colors[..g.order()].to_vec());
        prop_assert_eq!(
            is_strong_odd(&g, &phi).unwrap().holds(),
            is_square_coloring(&g, &phi).unwrap().holds()
        );
    }
}

#[test]
fn diagnostics_are_collected() {
    let c4 = strong_odd_core::graph::make_cycle(4).unwrap();
    let r = is_strong_odd(&c4, &Coloring::new(vec![0, 1, 0, 1])).unwrap();
    assert_eq!(r.violations.len(), 4);
    assert!(is_strong_odd(&c4, &Coloring::new(vec![0])).is_err());
}
