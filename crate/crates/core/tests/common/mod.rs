#![allow(dead_code)]

use proptest::prelude::*;
use strong_odd_core::coloring::Coloring;
use strong_odd_core::plane::PlaneMultigraph;
use strong_odd_core::Graph;

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for w in u + 1..n {
            if bits[i] {
                edges.push((u, w));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn graph_with_coloring(max_n: usize, max_k: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    graph(1, max_n).prop_flat_map(move |g| {
        let n = g.order();
        proptest::collection::vec(0..max_k, n).prop_map(move |c| (g.clone(), Coloring::new(c)))
    })
}

pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n.saturating_sub(2)).prop_map(move |seq| tree_from_pruefer(n, &seq))
    })
}

/// A tree plus one chord, so exactly one cycle.
pub fn unicyclic(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (tree(min_n.max(3), max_n), any::<u64>()).prop_map(|(t, seed)| {
        let n = t.order();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .filter(|&(u, w)| !t.has_edge(u, w))
            .collect();
        let chord = pairs[(seed % pairs.len() as u64) as usize];
        let mut edges = t.edges().to_vec();
        edges.push(chord);
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Stacked triangulation driven by `choices`, then edges dropped (by
/// `drops`) whenever the map stays connected.
pub fn planar_map(choices: &[usize], drops: &[usize]) -> PlaneMultigraph {
    let mut m = PlaneMultigraph::triangle();
    for &c in choices {
        let d = c % m.darts();
        m = m.stack_vertex(d).unwrap();
    }
    for &x in drops {
        let e = x % m.size();
        let mut keep = vec![true; m.size()];
        keep[e] = false;
        let (next, _, _) = m.restrict(&vec![true; m.order()], &keep);
        if next.is_connected() {
            m = next;
        }
    }
    m
}

pub fn embedded_planar(max_extra: usize, max_drops: usize) -> impl Strategy<Value = PlaneMultigraph> {
    (
        proptest::collection::vec(any::<usize>(), 0..=max_extra),
        proptest::collection::vec(any::<usize>(), 0..=max_drops),
    )
        .prop_map(|(c, d)| planar_map(&c, &d))
}
