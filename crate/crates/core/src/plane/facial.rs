use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::{ColoringError, MapError, SolveError};
use crate::solver::{Parity, Problem, SolveResult, Solver};

use super::PlaneMultigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacialViolation {
    /// `count` distinct vertices of `face` carry `color`, and `count` is even.
    EvenOnFace { face: usize, color: usize, count: usize },
    NotProper { u: usize, v: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FacialReport {
    pub violations: Vec<FacialViolation>,
}

impl FacialReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every face has zero or an odd number of distinct vertices of each color.
pub fn is_facially_odd(m: &PlaneMultigraph, phi: &Coloring) -> Result<FacialReport, ColoringError> {
    phi.check_len(m.order())?;
    let faces = m.trace_faces();
    let mut violations = Vec::new();
    for (f, set) in faces.boundary_vertices.iter().enumerate() {
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in set {
            *hist.entry(phi.color(v)).or_default() += 1;
        }
        for (color, count) in hist {
            if count % 2 == 0 {
                violations.push(FacialViolation::EvenOnFace { face: f, color, count });
            }
        }
    }
    Ok(FacialReport { violations })
}

pub fn is_proper_facially_odd(m: &PlaneMultigraph, phi: &Coloring) -> Result<FacialReport, ColoringError> {
    let mut report = is_facially_odd(m, phi)?;
    let g = m.underlying_graph();
    for &(u, v) in g.edges() {
        if phi.color(u) == phi.color(v) {
            report.violations.push(FacialViolation::NotProper { u, v });
        }
    }
    Ok(report)
}

/// Search problem whose solutions are the (proper) facially odd colorings.
pub fn facial_problem(m: &PlaneMultigraph, proper: bool) -> Problem {
    let conflicts: Vec<(usize, usize)> = if proper {
        m.underlying_graph().edges().to_vec()
    } else {
        Vec::new()
    };
    Problem::new(m.order(), &conflicts, m.trace_faces().boundary_vertices, Parity::Strong)
}

fn finish(result: SolveResult) -> Result<SolveResult, MapError> {
    if result.optimal {
        Ok(result)
    } else {
        Err(MapError::Solve(SolveError::BudgetExhausted { k: result.lower_bound }))
    }
}

/// Minimum number of colors in a proper facially odd coloring of a
/// 2-connected map.
pub fn chi_pfo_exact(m: &PlaneMultigraph, solver: &Solver<'_>) -> Result<SolveResult, MapError> {
    if m.order() < 3 {
        return Err(MapError::TooFewVertices);
    }
    if !m.is_biconnected() {
        return Err(MapError::NotBiconnected);
    }
    let lower = m.underlying_graph().clique_number().max(1);
    finish(solver.minimize(&facial_problem(m, true), lower))
}

/// Minimum number of colors in a facially odd coloring (no properness).
pub fn chi_fo_exact(m: &PlaneMultigraph, solver: &Solver<'_>) -> Result<SolveResult, MapError> {
    finish(solver.minimize(&facial_problem(m, false), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::oracle::brute_force_min;
    use crate::solver::Budget;
    use alloc::vec;

    fn cycle_map(n: usize) -> PlaneMultigraph {
        let rot: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect();
        PlaneMultigraph::from_rotation_neighbors(&rot).unwrap()
    }

    fn k4_map() -> PlaneMultigraph {
        PlaneMultigraph::triangle().stack_vertex(0).unwrap()
    }

    fn brute_pfo(m: &PlaneMultigraph) -> usize {
        let g = m.underlying_graph();
        brute_force_min(m.order(), &g, |phi| is_proper_facially_odd(m, phi).unwrap().holds()).unwrap()
    }

    #[test]
    fn verifiers() {
        let c4 = cycle_map(4);
        let r = is_facially_odd(&c4, &Coloring::new(vec![0, 1, 0, 1])).unwrap();
        assert!(!r.holds());
        assert!(matches!(r.violations[0], FacialViolation::EvenOnFace { color: 0, count: 2, .. }));
        assert!(is_facially_odd(&c4, &Coloring::rainbow(4)).unwrap().holds());
        let r = is_proper_facially_odd(&c4, &Coloring::new(vec![0, 0, 0, 0])).unwrap();
        assert!(!r.holds());
        assert!(r.violations.contains(&FacialViolation::NotProper { u: 0, v: 1 }));
        assert!(is_facially_odd(&c4, &Coloring::new(vec![0])).is_err());
    }

    #[test]
    fn exact_values_match_brute_force() {
        let solver = Solver::new(Budget::default());
        let c5 = cycle_map(5);
        assert_eq!(chi_pfo_exact(&c5, &solver).unwrap().value, 5);
        for m in [cycle_map(5), cycle_map(6), k4_map(), cycle_map(4)] {
            let r = chi_pfo_exact(&m, &solver).unwrap();
            assert_eq!(r.value, brute_pfo(&m));
            assert!(is_proper_facially_odd(&m, &r.witness).unwrap().holds());
        }
        let path = PlaneMultigraph::from_rotation_neighbors(&[vec![1], vec![0, 2], vec![1]]).unwrap();
        assert_eq!(chi_pfo_exact(&path, &solver), Err(MapError::NotBiconnected));
    }

    #[test]
    fn digon_expansion_forces_properness() {
        let solver = Solver::new(Budget::default());
        for m in [PlaneMultigraph::triangle(), cycle_map(5), cycle_map(6), k4_map()] {
            let expanded = m.digon_expand();
            let fo = chi_fo_exact(&expanded, &solver).unwrap();
            assert!(is_proper_facially_odd(&m, &fo.witness).unwrap().holds());
            assert_eq!(fo.value, chi_pfo_exact(&m, &solver).unwrap().value);
        }
    }
}
