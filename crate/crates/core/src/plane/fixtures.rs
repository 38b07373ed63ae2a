//! Small embedded graphs used by tests and examples.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::Coloring;

use super::PlaneMultigraph;

/// Triangle `0 1 2` drawn inside the pentagon `0 3 4 5 6`; vertex 0 is
/// shared. The face between them has walk `0 1 2 0 3 4 5 6`.
pub fn pentagon_triangle() -> PlaneMultigraph {
    PlaneMultigraph::from_rotation_neighbors(&[
        vec![6, 1, 2, 3],
        vec![2, 0],
        vec![0, 1],
        vec![0, 4],
        vec![3, 5],
        vec![4, 6],
        vec![0, 5],
    ])
    .unwrap()
}

/// [`pentagon_triangle`] with the chord `2 3` that splits off the triangle `0 2 3`.
pub fn pentagon_triangle_chorded() -> PlaneMultigraph {
    PlaneMultigraph::from_rotation_neighbors(&[
        vec![6, 1, 2, 3],
        vec![2, 0],
        vec![3, 0, 1],
        vec![0, 2, 4],
        vec![3, 5],
        vec![4, 6],
        vec![0, 5],
    ])
    .unwrap()
}

/// Wheel with hub 0 and rim `1..=k`: a degree-`k` vertex inside a
/// triangulated disk.
pub fn wheel(k: usize) -> PlaneMultigraph {
    let mut rot: Vec<Vec<usize>> = vec![(1..=k).rev().collect()];
    for i in 1..=k {
        let prev = if i == 1 { k } else { i - 1 };
        let next = if i == k { 1 } else { i + 1 };
        rot.push(vec![0, next, prev]);
    }
    PlaneMultigraph::from_rotation_neighbors(&rot).unwrap()
}

pub const GRID3_CENTER: usize = 4;

/// The 3 × 3 grid, row by row.
pub fn grid3() -> PlaneMultigraph {
    PlaneMultigraph::from_rotation_neighbors(&[
        vec![1, 3],
        vec![0, 2, 4],
        vec![1, 5],
        vec![0, 4, 6],
        vec![3, 1, 5, 7],
        vec![4, 2, 8],
        vec![3, 7],
        vec![6, 4, 8],
        vec![7, 5],
    ])
    .unwrap()
}

/// Hexagon `0..6` with pole 6 inside and pole 7 outside, both joined to
/// every hexagon vertex, and its 3-coloring (hexagon alternating, poles 2).
pub fn hexagonal_bipyramid() -> (PlaneMultigraph, Coloring) {
    let mut rot: Vec<Vec<usize>> = (0..6).map(|i| vec![7, (i + 5) % 6, 6, (i + 1) % 6]).collect();
    rot.push(vec![5, 4, 3, 2, 1, 0]);
    rot.push(vec![0, 1, 2, 3, 4, 5]);
    let phi = Coloring::new(vec![0, 1, 0, 1, 0, 1, 2, 2]);
    (PlaneMultigraph::from_rotation_neighbors(&rot).unwrap(), phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_vertex_walk() {
        let m = pentagon_triangle();
        let faces = m.trace_faces();
        assert_eq!(faces.len(), 3);
        let twice = faces
            .faces
            .iter()
            .find(|f| m.walk(f).iter().filter(|&&v| v == 0).count() == 2)
            .unwrap();
        assert_eq!(m.walk(twice), vec![0, 1, 2, 0, 3, 4, 5, 6]);
        assert!(m.satisfies_euler());
    }

    #[test]
    fn fixtures_are_valid() {
        assert!(pentagon_triangle_chorded().satisfies_euler());
        assert!(grid3().satisfies_euler());
        let w = wheel(5);
        assert!(w.satisfies_euler());
        assert!(w.trace_faces().faces.iter().all(|f| f.len() == 3 || f.len() == 5));
        let (m, phi) = hexagonal_bipyramid();
        assert!(m.satisfies_euler());
        assert!(m.trace_faces().faces.iter().all(|f| f.len() == 3));
        assert!(crate::coloring::is_proper(&m.underlying_graph(), &phi).unwrap().holds());
    }
}
