use alloc::vec;
use alloc::vec::Vec;

use super::{edge_of, PlaneMultigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    /// Blocks ordered by smallest edge id.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

impl Blocks {
    /// Blocks containing exactly one cut vertex, with that vertex.
    pub fn end_blocks(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .enumerate()
            .filter_map(|(i, b)| {
                let mut cuts = b.vertices.iter().filter(|v| self.cut_vertices.binary_search(v).is_ok());
                match (cuts.next(), cuts.next()) {
                    (Some(&v), None) => Some((i, v)),
                    _ => None,
                }
            })
            .collect()
    }
}

const UNSET: usize = usize::MAX;

/// Biconnected components of the underlying multigraph. Parallel edges
/// stay in one block; isolated vertices belong to none.
pub fn blocks(m: &PlaneMultigraph) -> Blocks {
    let n = m.order();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    // (vertex, edge to parent, next rotation index)
    let mut calls: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET || m.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        calls.push((root, UNSET, 0));
        while let Some(top) = calls.last_mut() {
            let (u, parent_edge, i) = *top;
            if i < m.degree(u) {
                top.2 += 1;
                let d = m.rotation(u)[i];
                let e = edge_of(d);
                if e == parent_edge {
                    continue;
                }
                let w = m.head(d);
                if disc[w] == UNSET {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    calls.push((w, e, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                calls.pop();
                if let Some(&(p, _, _)) = calls.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        found.push(block);
                    }
                }
            }
        }
    }

    let mut count = vec![0usize; n];
    let mut blocks: Vec<Block> = found
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&e| m.ends(e)).collect();
            vertices.sort_unstable();
            vertices.dedup();
            for &v in &vertices {
                count[v] += 1;
            }
            Block { edges, vertices }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges[0]);
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
    Blocks { blocks, cut_vertices }
}

impl PlaneMultigraph {
    /// At least 3 vertices, connected, no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.order() >= 3 && self.is_connected() && blocks(self).cut_vertices.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::fixtures;

    #[test]
    fn shared_vertex_gives_two_blocks() {
        let m = fixtures::pentagon_triangle();
        let b = blocks(&m);
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices, vec![0]);
        assert_eq!(b.end_blocks().len(), 2);
        assert!(!m.is_biconnected());
    }

    #[test]
    fn parallel_edges_share_a_block() {
        let m = PlaneMultigraph::new(3, vec![[0, 1], [0, 1], [1, 2]], vec![vec![0, 2], vec![3, 1, 4], vec![5]]).unwrap();
        let b = blocks(&m);
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.blocks[0].edges, vec![0, 1]);
        assert_eq!(b.cut_vertices, vec![1]);
    }

    #[test]
    fn triangulations_are_biconnected() {
        assert!(PlaneMultigraph::triangle().is_biconnected());
        let (m, _) = fixtures::hexagonal_bipyramid();
        assert!(m.is_biconnected());
        let path = PlaneMultigraph::from_rotation_neighbors(&[vec![1], vec![0, 2], vec![1]]).unwrap();
        let b = blocks(&path);
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices, vec![1]);
    }
}
