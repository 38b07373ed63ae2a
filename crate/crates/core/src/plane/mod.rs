//! Plane multigraphs as combinatorial maps.
//!
//! Edge `e` owns darts `2e` (leaving `ends[0]`) and `2e + 1` (leaving
//! `ends[1]`). Each vertex lists its darts in clockwise order, and faces are
//! the orbits of `d ↦ succ(twin(d))`.

mod annihilate;
mod blocks;
mod claims;
mod facial;
pub mod fixtures;
mod pipeline;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::MapError;
use crate::graph::Graph;

pub use annihilate::{check_annihilation, Annihilation};
pub use blocks::{blocks, Block, Blocks};
pub use claims::{
    augment_claim2, augment_claim2_with, check_claim1, claim1_targets, decompose_claim1, ColorClass,
};
pub use facial::{
    chi_fo_exact, chi_pfo_exact, facial_problem, is_facially_odd, is_proper_facially_odd,
    FacialReport, FacialViolation,
};
pub use pipeline::{strong_odd_via_planar, ClassReport, PipelineResult};

const UNSET: usize = usize::MAX;

#[inline]
pub fn twin(d: usize) -> usize {
    d ^ 1
}

#[inline]
pub fn edge_of(d: usize) -> usize {
    d >> 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMultigraph {
    n: usize,
    ends: Vec<[usize; 2]>,
    rotation: Vec<Vec<usize>>,
    slot: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceData {
    /// Dart cycles, each starting at its smallest dart; faces are sorted by it.
    pub faces: Vec<Vec<usize>>,
    /// Sorted distinct vertices of each face.
    pub boundary_vertices: Vec<Vec<usize>>,
    /// Sorted face ids around each vertex.
    pub incidence: Vec<Vec<usize>>,
    /// Face id of every dart.
    pub face_of: Vec<usize>,
}

impl FaceData {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn has_vertex_set(&self, set: &[usize]) -> bool {
        self.boundary_vertices.iter().any(|b| b == set)
    }
}

impl PlaneMultigraph {
    /// Validates and builds a map. Missing trailing rotation lists are
    /// treated as isolated vertices.
    pub fn new(n: usize, ends: Vec<[usize; 2]>, mut rotation: Vec<Vec<usize>>) -> Result<Self, MapError> {
        if rotation.len() > n {
            return Err(MapError::BadRotationVertex(n));
        }
        rotation.resize(n, Vec::new());
        for (e, &[u, w]) in ends.iter().enumerate() {
            if u >= n || w >= n {
                return Err(MapError::EndpointOutOfRange { edge: e, n });
            }
            if u == w {
                return Err(MapError::Loop(e));
            }
        }
        let mut slot = vec![UNSET; 2 * ends.len()];
        for (v, darts) in rotation.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                if d >= slot.len() || slot[d] != UNSET || ends[edge_of(d)][d & 1] != v {
                    return Err(MapError::BadRotation(d));
                }
                slot[d] = i;
            }
        }
        if let Some(d) = slot.iter().position(|&s| s == UNSET) {
            return Err(MapError::BadRotation(d));
        }
        Ok(PlaneMultigraph { n, ends, rotation, slot })
    }

    /// Simple map from clockwise neighbour lists. Edges are numbered in
    /// lexicographic order of their sorted endpoint pairs.
    pub fn from_rotation_neighbors(neighbors: &[Vec<usize>]) -> Result<Self, MapError> {
        let n = neighbors.len();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (u, list) in neighbors.iter().enumerate() {
            for &w in list {
                if w >= n {
                    return Err(MapError::VertexOutOfRange(w));
                }
                if u < w {
                    pairs.push((u, w));
                }
            }
        }
        pairs.sort_unstable();
        if let Some(p) = pairs.windows(2).find(|p| p[0] == p[1]) {
            return Err(MapError::ParallelAtVertex(p[0].0));
        }
        let id: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(e, &p)| (p, e)).collect();
        let ends: Vec<[usize; 2]> = pairs.iter().map(|&(u, w)| [u, w]).collect();
        let mut rotation = Vec::with_capacity(n);
        for (u, list) in neighbors.iter().enumerate() {
            let mut darts = Vec::with_capacity(list.len());
            for &w in list {
                if u == w {
                    return Err(MapError::Loop(UNSET));
                }
                let e = *id.get(&(u.min(w), u.max(w))).ok_or(MapError::VertexOutOfRange(w))?;
                darts.push(2 * e + usize::from(u > w));
            }
            rotation.push(darts);
        }
        Self::new(n, ends, rotation)
    }

    pub fn empty(n: usize) -> Self {
        PlaneMultigraph {
            n,
            ends: Vec::new(),
            rotation: vec![Vec::new(); n],
            slot: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.ends.len()
    }

    pub fn darts(&self) -> usize {
        2 * self.ends.len()
    }

    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.ends
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Tail of dart `d`.
    pub fn vertex_of(&self, d: usize) -> usize {
        self.ends[edge_of(d)][d & 1]
    }

    /// Head of dart `d`.
    pub fn head(&self, d: usize) -> usize {
        self.ends[edge_of(d)][(d & 1) ^ 1]
    }

    /// Next dart clockwise around the tail of `d`.
    pub fn succ(&self, d: usize) -> usize {
        let r = &self.rotation[self.vertex_of(d)];
        r[(self.slot[d] + 1) % r.len()]
    }

    pub fn pred(&self, d: usize) -> usize {
        let r = &self.rotation[self.vertex_of(d)];
        r[(self.slot[d] + r.len() - 1) % r.len()]
    }

    pub fn face_next(&self, d: usize) -> usize {
        self.succ(twin(d))
    }

    /// Neighbours of `v` in clockwise order, with multiplicity.
    pub fn rotation_neighbors(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&d| self.head(d)).collect()
    }

    /// Clockwise neighbour cycles in canonical rotation; equal for two simple
    /// maps exactly when they are the same embedding up to edge numbering.
    pub fn rotation_signature(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| canonical_cycle(&self.rotation_neighbors(v))).collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self.ends.iter().map(|&[u, w]| (u.min(w), u.max(w))).collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|p| p[0] != p[1])
    }

    pub fn underlying_graph(&self) -> Graph {
        Graph::from_edges_dedup(self.n, self.ends.iter().map(|&[u, w]| (u, w)))
    }

    pub fn trace_faces(&self) -> FaceData {
        let mut face_of = vec![UNSET; self.darts()];
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.darts() {
            if face_of[start] != UNSET {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            while face_of[d] == UNSET {
                face_of[d] = id;
                cycle.push(d);
                d = self.face_next(d);
            }
            faces.push(cycle);
        }
        let mut incidence = vec![Vec::new(); self.n];
        let boundary_vertices = faces
            .iter()
            .enumerate()
            .map(|(f, cycle)| {
                let mut vs: Vec<usize> = cycle.iter().map(|&d| self.vertex_of(d)).collect();
                vs.sort_unstable();
                vs.dedup();
                for &v in &vs {
                    incidence[v].push(f);
                }
                vs
            })
            .collect();
        FaceData {
            faces,
            boundary_vertices,
            incidence,
            face_of,
        }
    }

    /// Vertex sequence of a face walk given as a dart cycle.
    pub fn walk(&self, face: &[usize]) -> Vec<usize> {
        face.iter().map(|&d| self.vertex_of(d)).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![UNSET; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != UNSET {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &d in &self.rotation[v] {
                    let w = self.head(d);
                    if comp[w] == UNSET {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `n − m + f = 2` for a connected map (a lone vertex counts one face).
    pub fn satisfies_euler(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        if !self.is_connected() {
            return false;
        }
        let f = self.trace_faces().len().max(1);
        self.n + f == self.size() + 2
    }

    /// Keeps the listed vertices and edges (an edge also needs both ends).
    /// Ids are compacted in order; returns the map and the old → new
    /// vertex and edge maps.
    pub fn restrict(
        &self,
        keep_vertex: &[bool],
        keep_edge: &[bool],
    ) -> (Self, Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut vmap = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep_vertex[v] {
                vmap[v] = Some(next);
                next += 1;
            }
        }
        let mut emap = vec![None; self.size()];
        let mut ends = Vec::new();
        for (e, &[u, w]) in self.ends.iter().enumerate() {
            if keep_edge[e] {
                if let (Some(a), Some(b)) = (vmap[u], vmap[w]) {
                    emap[e] = Some(ends.len());
                    ends.push([a, b]);
                }
            }
        }
        let mut rotation = vec![Vec::new(); next];
        for (v, &slot) in vmap.iter().enumerate() {
            if let Some(nv) = slot {
                rotation[nv] = self.rotation[v]
                    .iter()
                    .filter_map(|&d| emap[edge_of(d)].map(|e| 2 * e + (d & 1)))
                    .collect();
            }
        }
        let map = Self::new(next, ends, rotation).expect("restriction of a valid map is valid");
        (map, vmap, emap)
    }

    /// Adds edge `u w` as a new last edge. Its dart at `u` goes just before
    /// `corner_u` in `u`'s rotation (likewise at `w`); `None` is only allowed
    /// for an isolated endpoint. With both corners on one face, the face is
    /// split into `[a, corner_w, …]` and `[b, corner_u, …]`, where `a` leaves
    /// `u` and `b` leaves `w`. Corners on different faces merge them.
    pub(crate) fn insert_edge(
        &self,
        u: usize,
        corner_u: Option<usize>,
        w: usize,
        corner_w: Option<usize>,
    ) -> Self {
        assert!(u != w && u < self.n && w < self.n);
        let e = self.size();
        let mut ends = self.ends.clone();
        ends.push([u, w]);
        let mut rotation = self.rotation.clone();
        for (v, corner, d) in [(u, corner_u, 2 * e), (w, corner_w, 2 * e + 1)] {
            match corner {
                Some(c) => {
                    assert_eq!(self.vertex_of(c), v, "corner must leave its vertex");
                    rotation[v].insert(self.slot[c], d);
                }
                None => {
                    assert!(rotation[v].is_empty(), "corner needed at a non-isolated vertex");
                    rotation[v].push(d);
                }
            }
        }
        Self::new(self.n, ends, rotation).expect("edge insertion keeps the map valid")
    }

    /// Puts a new vertex inside the triangular face of `d0` and joins it to
    /// the three corners.
    pub fn stack_vertex(&self, d0: usize) -> Result<Self, MapError> {
        if d0 >= self.darts() {
            return Err(MapError::BadRotation(d0));
        }
        let d1 = self.face_next(d0);
        let d2 = self.face_next(d1);
        let corners = [self.vertex_of(d0), self.vertex_of(d1), self.vertex_of(d2)];
        if self.face_next(d2) != d0
            || corners[0] == corners[1]
            || corners[1] == corners[2]
            || corners[0] == corners[2]
        {
            return Err(MapError::NotTriangle(d0));
        }
        let x = self.n;
        let m = self.size();
        let mut ends = self.ends.clone();
        let mut rotation = self.rotation.clone();
        let darts = [d0, d1, d2];
        for (i, &a) in corners.iter().enumerate() {
            ends.push([a, x]);
            let pos = rotation[a].iter().position(|&d| d == darts[i]).unwrap();
            rotation[a].insert(pos, 2 * (m + i));
        }
        rotation.push((0..3).rev().map(|i| 2 * (m + i) + 1).collect());
        Self::new(self.n + 1, ends, rotation)
    }

    /// The embedded triangle on vertices 0, 1, 2.
    pub fn triangle() -> Self {
        Self::from_rotation_neighbors(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    /// Replaces every edge by two parallel edges bounding a digon. Edge `e`
    /// becomes edges `2e` and `2e + 1`.
    pub fn digon_expand(&self) -> Self {
        let mut ends = Vec::with_capacity(2 * self.size());
        for &pair in &self.ends {
            ends.push(pair);
            ends.push(pair);
        }
        let rotation = self
            .rotation
            .iter()
            .map(|darts| {
                darts
                    .iter()
                    .flat_map(|&d| {
                        let (e, s) = (edge_of(d), d & 1);
                        let first = 2 * (2 * e) + s;
                        let second = 2 * (2 * e + 1) + s;
                        if s == 0 {
                            [first, second]
                        } else {
                            [second, first]
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(self.n, ends, rotation).expect("digon expansion keeps the map valid")
    }
}

/// Lexicographically smallest rotation of a cyclic sequence.
pub(crate) fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    (0..seq.len().max(1))
        .map(|r| {
            let mut v = seq.to_vec();
            v.rotate_left(r.min(seq.len()));
            v
        })
        .min()
        .unwrap_or_default()
}
