//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strong_odd_core::plane::PlaneMultigraph;
use strong_odd_core::Graph;

/// Generator for item `index` of a corpus with the given seed. Items are
/// independent of each other, so any subset can be regenerated alone.
pub fn item_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, &pruefer_edges(n, &seq)).expect("Prüfer decoding yields a tree")
}

fn pruefer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Random tree with every degree odd on `2j + 2` vertices: starting from
/// an edge, `j` times give some vertex two new leaves.
pub fn random_odd_tree(j: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = vec![(0, 1)];
    let mut n = 2;
    for _ in 0..j {
        let v = rng.gen_range(0..n);
        edges.push((v, n));
        edges.push((v, n + 1));
        n += 2;
    }
    Graph::from_edges(n, &edges).expect("new leaves are fresh vertices")
}

/// Random tree plus one chord: a connected unicyclic graph (`n >= 3`).
pub fn random_unicyclic(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 3, "a unicyclic graph needs at least 3 vertices");
    let t = random_tree(n, rng);
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !t.has_edge(u, v))
        .collect();
    let &chord = non_edges.choose(rng).expect("a tree on 3+ vertices is not complete");
    let mut edges = t.edges().to_vec();
    edges.push(chord);
    Graph::from_edges(n, &edges).expect("chord is a new edge")
}

/// Erdős-Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pairs are distinct")
}

/// Stacked triangulation on `n >= 3` vertices, then each edge dropped with
/// probability `drop` as long as the map stays connected.
pub fn random_plane_map(n: usize, drop: f64, rng: &mut impl Rng) -> PlaneMultigraph {
    assert!(n >= 3, "plane maps start from a triangle");
    let mut m = PlaneMultigraph::triangle();
    while m.order() < n {
        let d = rng.gen_range(0..m.darts());
        m = m.stack_vertex(d).expect("every face of a stacked triangulation is a triangle");
    }
    let mut e = 0;
    while e < m.size() {
        if rng.gen_bool(drop) {
            let mut keep = vec![true; m.size()];
            keep[e] = false;
            let (next, _, _) = m.restrict(&vec![true; m.order()], &keep);
            if next.is_connected() {
                m = next;
                continue;
            }
        }
        e += 1;
    }
    m
}
