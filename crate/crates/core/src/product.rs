//! The four standard graph products. Vertex `(g, h)` has id `g * |V(H)| + h`,
//! so a "column" is a fixed `g` and a "row" is a fixed `h`.

use alloc::vec::Vec;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
        }
    }
}

impl core::str::FromStr for ProductKind {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        ProductKind::ALL.into_iter().find(|k| k.name() == s).ok_or(())
    }
}

#[inline]
pub fn product_vertex(h_order: usize, g: usize, h: usize) -> usize {
    g * h_order + h
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Result<Graph, GraphError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let (ng, nh) = (g.order(), h.order());
    let id = |a: usize, b: usize| product_vertex(nh, a, b);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let adj_or_eq_g = |a: usize, b: usize| a == b || g.has_edge(a, b);
    let adj_or_eq_h = |a: usize, b: usize| a == b || h.has_edge(a, b);
    for a in 0..ng {
        for b in 0..nh {
            for c in 0..ng {
                for d in 0..nh {
                    let (u, v) = (id(a, b), id(c, d));
                    if u >= v {
                        continue;
                    }
                    let joined = match kind {
                        ProductKind::Cartesian => {
                            (a == c && h.has_edge(b, d)) || (g.has_edge(a, c) && b == d)
                        }
                        ProductKind::Direct => g.has_edge(a, c) && h.has_edge(b, d),
                        ProductKind::Strong => adj_or_eq_g(a, c) && adj_or_eq_h(b, d),
                        ProductKind::Lexicographic => {
                            g.has_edge(a, c) || (a == c && h.has_edge(b, d))
                        }
                    };
                    if joined {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Ok(Graph::from_edges_dedup(ng * nh, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path};

    #[test]
    fn small_products() {
        let k2 = make_complete(2).unwrap();
        let k3 = make_complete(3).unwrap();
        let c4 = product(&k2, &k2, ProductKind::Cartesian).unwrap();
        assert_eq!(c4.size(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(c4.is_connected());

        // K2 x K3: (a,b)~(c,d) iff a != c and b != d. Six edges, 2-regular, connected.
        let c6 = product(&k2, &k3, ProductKind::Direct).unwrap();
        let expected = [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)];
        assert_eq!(c6.edges(), &expected);
        assert!(c6.is_connected());

        assert_eq!(
            product(&k2, &k2, ProductKind::Lexicographic).unwrap(),
            make_complete(4).unwrap()
        );
    }

    #[test]
    fn strong_is_disjoint_union_of_cartesian_and_direct() {
        let g = make_path(4).unwrap();
        let h = make_cycle(5).unwrap();
        let cart = product(&g, &h, ProductKind::Cartesian).unwrap();
        let dir = product(&g, &h, ProductKind::Direct).unwrap();
        let strong = product(&g, &h, ProductKind::Strong).unwrap();
        assert!(cart.edges().iter().all(|e| !dir.edges().contains(e)));
        let mut union: Vec<_> = cart.edges().iter().chain(dir.edges()).copied().collect();
        union.sort_unstable();
        assert_eq!(union, strong.edges());
    }

    #[test]
    fn lexicographic_of_complete_is_complete() {
        for p in 1..4 {
            for q in 1..4 {
                let l = product(
                    &make_complete(p).unwrap(),
                    &make_complete(q).unwrap(),
                    ProductKind::Lexicographic,
                )
                .unwrap();
                assert_eq!(l.size(), p * q * (p * q - 1) / 2);
            }
        }
    }

    #[test]
    fn empty_factor() {
        assert_eq!(
            product(&Graph::empty(0), &make_complete(2).unwrap(), ProductKind::Direct),
            Err(GraphError::EmptyFactor)
        );
    }
}
