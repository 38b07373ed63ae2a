//! Simple undirected graphs on contiguous vertex ids, plus the standard
//! families and unary/binary operations used throughout the crate.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;

/// A simple undirected graph on vertices `0..n`.
///
/// The edge list is kept canonical: every edge is stored as `(min, max)` and
/// the list is sorted lexicographically. Adjacency lists are sorted as well,
/// so iteration order is deterministic everywhere.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Strict constructor: rejects loops, out-of-range endpoints and
    /// duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, canon))
    }

    /// Lenient constructor for internal builders: drops loops and duplicates.
    pub(crate) fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut canon: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        canon.sort_unstable();
        canon.dedup();
        debug_assert!(canon.iter().all(|&(_, v)| v < n));
        Self::from_canonical(n, canon)
    }

    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Diameter, or `None` if the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges_dedup(vertices.len(), edges)
    }

    /// Size of a maximum clique (exact, exponential in the worst case).
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, candidates: &[usize], size: usize, best: &mut usize) {
            if size + candidates.len() <= *best {
                return;
            }
            if candidates.is_empty() {
                *best = size;
                return;
            }
            for (i, &v) in candidates.iter().enumerate() {
                if size + candidates.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = candidates[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                grow(g, &next, size + 1, best);
            }
        }
        let all: Vec<usize> = (0..self.n).collect();
        let mut best = 0;
        grow(self, &all, 0, &mut best);
        best
    }

    /// `true` if no vertex has three pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|v| {
            let nb = &self.adj[v];
            for a in 0..nb.len() {
                for b in a + 1..nb.len() {
                    if self.has_edge(nb[a], nb[b]) {
                        continue;
                    }
                    for c in b + 1..nb.len() {
                        if !self.has_edge(nb[a], nb[c]) && !self.has_edge(nb[b], nb[c]) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }
}

fn require(n: usize, min: usize) -> Result<(), GraphError> {
    if n < min {
        Err(GraphError::TooSmall { n, min })
    } else {
        Ok(())
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    require(n, 1)?;
    Ok(Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i))))
}

/// Cycle in traversal order `0 - 1 - ... - (n-1) - 0`.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    require(n, 3)?;
    Ok(Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    require(n, 1)?;
    Ok(Graph::from_edges_dedup(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// Complete multipartite graph; part `i` occupies a contiguous id block.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::NoParts);
    }
    let n: usize = parts.iter().sum();
    require(n, 1)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, p));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v]);
    Ok(Graph::from_edges_dedup(n, edges))
}

pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    make_complete_multipartite(&[m, n])
}

/// Star `K_{1,leaves}` with centre 0.
pub fn make_star(leaves: usize) -> Result<Graph, GraphError> {
    make_complete_bipartite(1, leaves)
}

/// Disjoint union: `h`'s vertices are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_edges_dedup(g.order() + h.order(), edges)
}

/// Join `G + H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let cross = (0..g.order()).flat_map(|u| (0..h.order()).map(move |v| (u, v + off)));
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(u, v)| (u + off, v + off)))
        .chain(cross);
    Graph::from_edges_dedup(g.order() + h.order(), edges)
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v));
    Graph::from_edges_dedup(n, edges)
}

/// `G²`: adds `uv` whenever `u` and `v` have a common neighbour.
pub fn square(g: &Graph) -> Graph {
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for v in 0..g.order() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges_dedup(g.order(), edges)
}

/// Line graph; vertex `i` is the `i`-th canonical edge of `g`.
pub fn line_graph(g: &Graph) -> Graph {
    let es = g.edges();
    let mut edges = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges_dedup(es.len(), edges)
}
