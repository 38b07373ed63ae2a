use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{is_strong_odd, Coloring};
use crate::error::MapError;
use crate::solver::{Param, Solver};

use super::claims::{augment_claim2_with, claim1_targets, decompose_claim1};
use super::facial::chi_pfo_exact;
use super::PlaneMultigraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub color: usize,
    /// Input ids of the class.
    pub vertices: Vec<usize>,
    /// Number of distinct sets `N(x) ∩ V_i` of size at least 2.
    pub targets: usize,
    /// Edges of the class map before and after augmentation.
    pub edges: usize,
    pub augmented_edges: usize,
    /// Colors used on this class; exact when the class needed a facial search.
    pub colors: usize,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub coloring: Coloring,
    pub classes: Vec<ClassReport>,
}

/// Strong odd coloring of a connected plane simple graph from a proper
/// coloring: split into color classes, make each class map 2-connected, color
/// it properly facially odd and take the union over disjoint palettes.
pub fn strong_odd_via_planar(
    m: &PlaneMultigraph,
    phi: &Coloring,
    solver: &Solver<'_>,
) -> Result<PipelineResult, MapError> {
    if !m.is_connected() {
        return Err(MapError::Disconnected);
    }
    if !m.is_simple() {
        let v = m.edges().iter().enumerate().find_map(|(e, &[u, w])| {
            m.edges()[..e].iter().any(|&[a, b]| (a, b) == (u, w) || (a, b) == (w, u)).then_some(u)
        });
        return Err(MapError::ParallelAtVertex(v.unwrap_or(0)));
    }
    let classes = decompose_claim1(m, phi)?;
    let mut colors = vec![usize::MAX; m.order()];
    let mut offset = 0;
    let mut reports = Vec::with_capacity(classes.len());
    for class in &classes {
        if class.order() == 0 {
            continue;
        }
        let targets = claim1_targets(m, class);
        let (local, augmented_edges, nodes) = if class.order() >= 3 {
            let hat = augment_claim2_with(&class.map, &targets)?;
            let r = chi_pfo_exact(&hat, solver)?;
            (r.witness, hat.size(), r.nodes_explored)
        } else {
            let r = solver.solve(&class.map.underlying_graph(), Param::Chromatic);
            (r.witness, class.map.size(), r.nodes_explored)
        };
        let local = local.compacted();
        let used = local.distinct();
        for (i, &v) in class.original.iter().enumerate() {
            colors[v] = offset + local.color(i);
        }
        offset += used;
        reports.push(ClassReport {
            color: class.color,
            vertices: class.original.clone(),
            targets: targets.len(),
            edges: class.map.size(),
            augmented_edges,
            colors: used,
            nodes_explored: nodes,
        });
    }
    let coloring = Coloring::new(colors);
    if !is_strong_odd(&m.underlying_graph(), &coloring)?.holds() {
        return Err(MapError::Postcondition(format!(
            "union coloring with {offset} colors is not strong odd"
        )));
    }
    Ok(PipelineResult { coloring, classes: reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::fixtures;
    use crate::solver::Budget;

    #[test]
    fn bipyramid() {
        let (m, phi) = fixtures::hexagonal_bipyramid();
        let out = strong_odd_via_planar(&m, &phi, &Solver::new(Budget::default())).unwrap();
        assert_eq!(out.classes.len(), 3);
        let bound: usize = out.classes.iter().map(|c| c.colors).sum();
        assert_eq!(out.coloring.distinct(), bound);
        assert!(is_strong_odd(&m.underlying_graph(), &out.coloring).unwrap().holds());
    }

    #[test]
    fn embedded_tree() {
        // spider with legs of length 2
        let m = PlaneMultigraph::from_rotation_neighbors(&[
            vec![1, 2, 3],
            vec![0, 4],
            vec![0, 5],
            vec![0, 6],
            vec![1],
            vec![2],
            vec![3],
        ])
        .unwrap();
        let phi = Coloring::new(vec![0, 1, 1, 1, 0, 0, 0]);
        let out = strong_odd_via_planar(&m, &phi, &Solver::new(Budget::default())).unwrap();
        assert!(is_strong_odd(&m.underlying_graph(), &out.coloring).unwrap().holds());
    }

    #[test]
    fn rejects_bad_input() {
        let solver = Solver::new(Budget::default());
        let t = PlaneMultigraph::triangle();
        assert_eq!(
            strong_odd_via_planar(&t, &Coloring::new(vec![0, 0, 1]), &solver),
            Err(MapError::ImproperColoring)
        );
        assert_eq!(
            strong_odd_via_planar(&PlaneMultigraph::empty(2), &Coloring::new(vec![0, 0]), &solver),
            Err(MapError::Disconnected)
        );
    }
}
