use alloc::format;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::{ConstructError, GraphError};
use crate::graph::{complement, disjoint_union, make_complete, Graph};
use crate::product::{product, ProductKind};

use super::Constructed;

/// Strong odd coloring of `K_p × K_q` (vertex `(g, h)` is `g·q + h`).
pub fn color_direct_complete(p: usize, q: usize) -> Result<Constructed, ConstructError> {
    if p < 2 || q < 2 {
        return Err(ConstructError::FactorTooSmall(p, q));
    }
    // A color class equal to a full row or column leaves every vertex seeing
    // that color (len - 1) times, so the line length must be even.
    let (colors, case): (Vec<usize>, _) = match (p % 2, q % 2) {
        (1, 1) => ((0..p * q).collect(), "p, q odd: rainbow"),
        (0, 1) => ((0..p * q).map(|v| v % q).collect(), "p even, q odd: color by h"),
        (1, 0) => ((0..p * q).map(|v| v / q).collect(), "p odd, q even: color by g"),
        _ if p <= q => ((0..p * q).map(|v| v / q).collect(), "p, q even, p <= q: color by g"),
        _ => ((0..p * q).map(|v| v % q).collect(), "p, q even, p > q: color by h"),
    };
    let mut out = Constructed::new(Coloring::new(colors));
    out.steps = (p * q) as u64;
    out.note(format!("K_{p} x K_{q}: {case}"));
    Ok(out)
}

/// 1-based colors of the five-color strong odd coloring of `C5 □ C5`;
/// `C5_BOX_C5_TABLE[g][h]` is the color of vertex `(g, h)`.
pub const C5_BOX_C5_TABLE: [[usize; 5]; 5] = [
    [1, 2, 3, 4, 5],
    [4, 5, 1, 2, 3],
    [2, 3, 4, 5, 1],
    [5, 1, 2, 3, 4],
    [3, 4, 5, 1, 2],
];

/// The table above as a 0-based coloring of `product(C5, C5, Cartesian)`.
pub fn c5_box_c5_table() -> Coloring {
    Coloring::new(C5_BOX_C5_TABLE.iter().flatten().map(|c| c - 1).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NordhausGaddumKind {
    /// `(2k+1) K_{2k+1}`
    H1,
    /// `K_{2k+1} □ K_{2k+1}`
    H2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NordhausGaddum {
    pub graph: Graph,
    pub coloring: Coloring,
    pub complement: Graph,
    pub complement_coloring: Coloring,
}

fn expect_graph(r: Result<Graph, GraphError>) -> Graph {
    r.expect("parameters validated before building")
}

/// Extremal pairs for the sum and product of `χ_so(G)` and `χ_so(Ḡ)` on
/// `n = (2k+1)²` vertices.
pub fn nordhaus_gaddum(k: usize, kind: NordhausGaddumKind) -> Result<NordhausGaddum, ConstructError> {
    if k == 0 {
        return Err(ConstructError::FactorTooSmall(1, 1));
    }
    let m = 2 * k + 1;
    let n = m * m;
    let out = match kind {
        NordhausGaddumKind::H1 => {
            let km = expect_graph(make_complete(m));
            let mut graph = km.clone();
            for _ in 1..m {
                graph = disjoint_union(&graph, &km);
            }
            NordhausGaddum {
                complement: complement(&graph),
                coloring: Coloring::new((0..n).map(|v| v % m).collect()),
                complement_coloring: Coloring::new((0..n).map(|v| v / m).collect()),
                graph,
            }
        }
        NordhausGaddumKind::H2 => {
            let km = expect_graph(make_complete(m));
            let graph = expect_graph(product(&km, &km, ProductKind::Cartesian));
            NordhausGaddum {
                complement: complement(&graph),
                coloring: Coloring::rainbow(n),
                complement_coloring: Coloring::rainbow(n),
                graph,
            }
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_strong_odd;
    use crate::graph::make_cycle;

    #[test]
    fn direct_complete_counts() {
        for (p, q, expected) in [(3, 3, 9), (4, 3, 3), (3, 4, 3), (4, 6, 4), (6, 4, 4), (2, 2, 2), (5, 5, 25)] {
            let c = color_direct_complete(p, q).unwrap();
            assert_eq!(c.coloring.distinct(), expected, "({p},{q})");
            let kp = make_complete(p).unwrap();
            let kq = make_complete(q).unwrap();
            let g = product(&kp, &kq, ProductKind::Direct).unwrap();
            assert!(is_strong_odd(&g, &c.coloring).unwrap().holds(), "({p},{q})");
        }
        assert_eq!(color_direct_complete(1, 3), Err(ConstructError::FactorTooSmall(1, 3)));
    }

    #[test]
    fn c5_table() {
        let c5 = make_cycle(5).unwrap();
        let g = product(&c5, &c5, ProductKind::Cartesian).unwrap();
        let phi = c5_box_c5_table();
        assert_eq!(phi.color(0), 0);
        assert_eq!(phi.color(5), 3);
        assert_eq!(phi.color(24), 1);
        assert_eq!(phi.distinct(), 5);
        assert!(is_strong_odd(&g, &phi).unwrap().holds());
        for v in 0..25 {
            let mut seen = [false; 5];
            seen[phi.color(v)] = true;
            for &w in g.neighbors(v) {
                assert!(!seen[phi.color(w)]);
                seen[phi.color(w)] = true;
            }
        }
    }

    #[test]
    fn nordhaus_gaddum_k1() {
        for (kind, colors) in [(NordhausGaddumKind::H1, 3), (NordhausGaddumKind::H2, 9)] {
            let ng = nordhaus_gaddum(1, kind).unwrap();
            assert_eq!(ng.graph.order(), 9);
            assert_eq!(ng.coloring.distinct(), colors);
            assert_eq!(ng.complement_coloring.distinct(), colors);
            assert!(is_strong_odd(&ng.graph, &ng.coloring).unwrap().holds());
            assert!(is_strong_odd(&ng.complement, &ng.complement_coloring).unwrap().holds());
        }
        let ng = nordhaus_gaddum(2, NordhausGaddumKind::H1).unwrap();
        assert!(is_strong_odd(&ng.complement, &ng.complement_coloring).unwrap().holds());
    }
}
