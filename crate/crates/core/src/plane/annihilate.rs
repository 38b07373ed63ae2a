use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::error::MapError;

use super::{canonical_cycle, edge_of, twin, PlaneMultigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilation {
    pub map: PlaneMultigraph,
    /// Former neighbours of the removed vertex, clockwise, as old ids.
    pub neighbors: Vec<usize>,
    /// Old vertex id → new id.
    pub vertex_map: Vec<Option<usize>>,
    /// Ids of the edges `v_i v_{i+1}` in the new map.
    pub new_edges: Range<usize>,
}

impl PlaneMultigraph {
    /// Replaces `v` by a face through its neighbours: joins consecutive
    /// neighbours `v_i v_{i+1}` beside the old edges, then deletes `v`.
    pub fn annihilate(&self, v: usize) -> Result<Self, MapError> {
        self.annihilate_traced(v).map(|a| a.map)
    }

    pub fn annihilate_traced(&self, v: usize) -> Result<Annihilation, MapError> {
        if v >= self.n {
            return Err(MapError::VertexOutOfRange(v));
        }
        let around = &self.rotation[v];
        let d = around.len();
        if d < 2 {
            return Err(MapError::DegreeTooSmall(v));
        }
        let neighbors: Vec<usize> = around.iter().map(|&x| self.head(x)).collect();
        let mut sorted = neighbors.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return Err(MapError::ParallelAtVertex(v));
        }

        let vertex_map: Vec<Option<usize>> =
            (0..self.n).map(|u| (u != v).then(|| u - usize::from(u > v))).collect();
        let mut edge_map = vec![None; self.size()];
        let mut ends = Vec::with_capacity(self.size());
        for (e, &[a, b]) in self.ends.iter().enumerate() {
            if a != v && b != v {
                edge_map[e] = Some(ends.len());
                ends.push([vertex_map[a].unwrap(), vertex_map[b].unwrap()]);
            }
        }
        let base = ends.len();
        for i in 0..d {
            let (a, b) = (neighbors[i], neighbors[(i + 1) % d]);
            ends.push([vertex_map[a].unwrap(), vertex_map[b].unwrap()]);
        }
        // position of v_i in v's rotation, by twin of the removed dart
        let mut index_of_twin = vec![usize::MAX; self.darts()];
        for (i, &x) in around.iter().enumerate() {
            index_of_twin[twin(x)] = i;
        }
        let mut rotation = vec![Vec::new(); self.n - 1];
        for (u, &slot) in vertex_map.iter().enumerate() {
            let Some(nu) = slot else { continue };
            let mut list = Vec::with_capacity(self.rotation[u].len() + 1);
            for &x in &self.rotation[u] {
                match edge_map[edge_of(x)] {
                    Some(e) => list.push(2 * e + (x & 1)),
                    None => {
                        let i = index_of_twin[x];
                        list.push(2 * (base + i));
                        list.push(2 * (base + (i + d - 1) % d) + 1);
                    }
                }
            }
            rotation[nu] = list;
        }
        let map = PlaneMultigraph::new(self.n - 1, ends, rotation)?;
        let out = Annihilation {
            map,
            neighbors,
            vertex_map,
            new_edges: base..base + d,
        };
        if cfg!(debug_assertions) {
            check_annihilation(self, v, &out).map_err(MapError::Postcondition)?;
        }
        Ok(out)
    }
}

/// Checks the face structure after annihilating `v`: the face walks of the
/// result are exactly the old walks with `v` deleted, plus one new walk
/// `v_0, v_{d−1}, …, v_1`.
pub fn check_annihilation(before: &PlaneMultigraph, v: usize, after: &Annihilation) -> Result<(), String> {
    let rename = |u: usize| after.vertex_map[u].expect("only v is removed");
    let mut expected: Vec<Vec<usize>> = before
        .trace_faces()
        .faces
        .iter()
        .map(|f| {
            let walk: Vec<usize> = before.walk(f).into_iter().filter(|&u| u != v).map(rename).collect();
            canonical_cycle(&walk)
        })
        .collect();
    let nb = &after.neighbors;
    let mut new_face: Vec<usize> = vec![rename(nb[0])];
    new_face.extend(nb[1..].iter().rev().map(|&u| rename(u)));
    expected.push(canonical_cycle(&new_face));
    expected.sort();

    let mut actual: Vec<Vec<usize>> = after
        .map
        .trace_faces()
        .faces
        .iter()
        .map(|f| canonical_cycle(&after.map.walk(f)))
        .collect();
    actual.sort();
    if expected != actual {
        return Err(format!(
            "annihilating {v}: expected face walks {expected:?}, found {actual:?}"
        ));
    }
    if before.is_connected() && !after.map.satisfies_euler() {
        return Err(format!("annihilating {v}: Euler identity fails"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::fixtures;

    #[test]
    fn star_center_becomes_triangle() {
        let star = PlaneMultigraph::from_rotation_neighbors(&[vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        let before = star.trace_faces().len();
        let a = star.annihilate_traced(0).unwrap();
        assert_eq!(a.map.order(), 3);
        assert_eq!(a.map.size(), 3);
        let faces = a.map.trace_faces();
        assert_eq!(faces.len(), before + 1);
        assert!(faces.boundary_vertices.iter().all(|b| b == &[0, 1, 2]));
        check_annihilation(&star, 0, &a).unwrap();
    }

    #[test]
    fn degree_two_gives_digon() {
        // path 1-0-2 inside a triangle 1,2,3 drawn around it
        let m = PlaneMultigraph::from_rotation_neighbors(&[vec![1, 2], vec![0, 2], vec![1, 0]]).unwrap();
        let a = m.annihilate_traced(0).unwrap();
        assert_eq!(a.map.order(), 2);
        assert_eq!(a.map.size(), 3);
        let digons = a.map.trace_faces().faces.iter().filter(|f| f.len() == 2).count();
        assert!(digons >= 1);
        assert!(a.map.satisfies_euler());
    }

    #[test]
    fn grid_center() {
        let g = fixtures::grid3();
        let a = g.annihilate_traced(fixtures::GRID3_CENTER).unwrap();
        check_annihilation(&g, fixtures::GRID3_CENTER, &a).unwrap();
        let faces = a.map.trace_faces();
        // the four quadrilaterals around the center become one face on its neighbours
        assert!(faces.has_vertex_set(&[1, 3, 4, 6]));
        assert!(faces.has_vertex_set(&[0, 1, 3]));
        assert!(a.map.satisfies_euler());
    }

    #[test]
    fn wheel_hub() {
        let w = fixtures::wheel(5);
        let a = w.annihilate_traced(0).unwrap();
        check_annihilation(&w, 0, &a).unwrap();
        let faces = a.map.trace_faces();
        // five triangles lose the hub; the rim cycle gains a twin face
        assert_eq!(faces.len(), 7);
        assert_eq!(faces.boundary_vertices.iter().filter(|b| b.len() == 2).count(), 5);
    }

    #[test]
    fn preconditions() {
        let m = PlaneMultigraph::triangle();
        assert_eq!(m.annihilate(5), Err(MapError::VertexOutOfRange(5)));
        let p = PlaneMultigraph::from_rotation_neighbors(&[vec![1], vec![0]]).unwrap();
        assert_eq!(p.annihilate(0), Err(MapError::DegreeTooSmall(0)));
        let digon = PlaneMultigraph::new(3, vec![[0, 1], [0, 1], [0, 2]], vec![vec![0, 2, 4], vec![3, 1], vec![5]]).unwrap();
        assert_eq!(digon.annihilate(0), Err(MapError::ParallelAtVertex(0)));
    }

    #[test]
    fn every_vertex_of_the_bipyramid() {
        let (m, _) = fixtures::hexagonal_bipyramid();
        for v in 0..m.order() {
            let a = m.annihilate_traced(v).unwrap();
            check_annihilation(&m, v, &a).unwrap();
        }
    }
}
