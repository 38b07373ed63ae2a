mod common;

use proptest::prelude::*;
use strong_odd_core::coloring::Coloring;
use strong_odd_core::graph::{make_complete_bipartite, make_cycle, make_path, make_star};
use strong_odd_core::solver::oracle::{brute_force_chi_so, brute_force_param};
use strong_odd_core::solver::{
    chi_exact, chi_odd_exact, chi_so_exact, chi_square_exact, is_k_strong_odd_colorable, Budget, Decision, Param,
    Solver,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_matches_oracle(g in common::graph(1, 7)) {
        let budget = Budget::default();
        for param in Param::ALL {
            let r = Solver::new(budget).solve(&g, param);
            prop_assert!(r.optimal);
            prop_assert_eq!(r.value, brute_force_param(&g, param).unwrap(), "{}", param.name());
            prop_assert!(param.verifies(&g, &r.witness));
            prop_assert_eq!(r.witness.k(), r.value);
        }
    }

    #[test]
    fn chain_of_parameters(g in common::graph(1, 8)) {
        let b = Budget::default();
        let chi = chi_exact(&g, &b).value;
        let odd = chi_odd_exact(&g, &b).value;
        let so = chi_so_exact(&g, &b).value;
        let sq = chi_square_exact(&g, &b).value;
        let delta = g.max_degree();
        prop_assert!(chi <= odd && odd <= so && so <= sq && sq <= delta * delta + 1);
    }

    #[test]
    fn deterministic(g in common::graph(1, 8)) {
        let a = chi_so_exact(&g, &Budget::default());
        let b = chi_so_exact(&g, &Budget::default());
        prop_assert_eq!(a.witness, b.witness);
        prop_assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn no_answers_are_complete(g in common::graph(1, 6)) {
        // Below the optimum, the enumeration must find nothing, and at the
        // optimum every enumerated coloring must verify.
        let solver = Solver::new(Budget::default());
        let so = brute_force_chi_so(&g).unwrap();
        let problem = Param::StrongOdd.problem(&g);
        if so > 1 {
            let mut found = 0;
            let complete = solver.enumerate(&problem, so - 1, |_| {
                found += 1;
                true
            });
            prop_assert!(complete);
            prop_assert_eq!(found, 0);
        }
        let mut all_ok = true;
        solver.enumerate(&problem, so, |c: &Coloring| { all_ok &= Param::StrongOdd.verifies(&g, c); true });
        prop_assert!(all_ok);
    }
}

#[test]
fn small_named_values() {
    let b = Budget::default();
    assert_eq!(chi_so_exact(&make_path(4).unwrap(), &b).value, 3);
    assert_eq!(chi_so_exact(&make_star(3).unwrap(), &b).value, 2);
    assert_eq!(chi_square_exact(&make_complete_bipartite(2, 3).unwrap(), &b).value, 5);
    let c5 = make_cycle(5).unwrap();
    assert_eq!(chi_exact(&c5, &b).value, 3);
    assert_eq!(chi_odd_exact(&c5, &b).value, 5);
    assert!(matches!(is_k_strong_odd_colorable(&c5, 4, &b), Ok(Decision::No)));
    assert!(matches!(is_k_strong_odd_colorable(&c5, 5, &b), Ok(Decision::Yes(_))));
    let k23 = make_complete_bipartite(2, 3).unwrap();
    assert!(matches!(is_k_strong_odd_colorable(&k23, 4, &b), Ok(Decision::Yes(_))));
}

#[test]
fn budget_exhaustion_reports_bracket() {
    let g = strong_odd_core::gallery::gallery("G12a").unwrap().graph;
    let r = chi_so_exact(&g, &Budget::nodes(50));
    assert!(!r.optimal);
    assert_eq!(r.value, 12);
    assert!(r.lower_bound <= 12);
    assert!(Param::StrongOdd.verifies(&g, &r.witness));
}
