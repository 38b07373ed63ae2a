//! Vertex colorings and the four verifier predicates.
//!
//! Every verifier collects all violations instead of stopping at the first
//! one, so an empty report is exactly "the predicate holds".

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::ColoringError;
use crate::graph::{square, Graph};

/// A total assignment of 0-based color ids to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    /// Every vertex gets its own color.
    pub fn rainbow(n: usize) -> Self {
        Coloring::new((0..n).collect())
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// `1 + max id`; zero for the empty coloring.
    pub fn k(&self) -> usize {
        self.colors.iter().max().map_or(0, |&m| m + 1)
    }

    /// Number of distinct ids actually used.
    pub fn distinct(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renumber ids to `0..distinct()` in order of first appearance.
    pub fn canonical(&self) -> Coloring {
        let mut map = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    /// Renumber ids to `0..distinct()` preserving their relative order.
    pub fn compacted(&self) -> Coloring {
        let mut used = self.colors.clone();
        used.sort_unstable();
        used.dedup();
        let colors = self
            .colors
            .iter()
            .map(|c| used.binary_search(c).unwrap())
            .collect();
        Coloring { colors }
    }

    pub fn check_len(&self, n: usize) -> Result<(), ColoringError> {
        if self.colors.len() == n {
            Ok(())
        } else {
            Err(ColoringError::LengthMismatch {
                colors: self.colors.len(),
                vertices: n,
            })
        }
    }
}

impl From<Vec<usize>> for Coloring {
    fn from(colors: Vec<usize>) -> Self {
        Coloring::new(colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// An edge `(vertex, other)` with both ends colored `color`.
    NotProper { other: usize },
    /// `color` occurs a positive even number of times in `N(vertex)`.
    EvenColorInNeighborhood,
    /// Non-isolated `vertex` has no color of odd multiplicity in `N(vertex)`.
    NoOddColor,
    /// `vertex` and `other` are at distance two and share `color`.
    Distance2Clash { other: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertex: usize,
    pub color: usize,
    /// Occurrences of `color` in `N(vertex)` (2 for edge clashes).
    pub count: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }
}

/// Color → count over the open neighbourhood of `v`.
pub fn neighborhood_histogram(g: &Graph, phi: &Coloring, v: usize) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for &u in g.neighbors(v) {
        *hist.entry(phi.color(u)).or_insert(0) += 1;
    }
    hist
}

pub fn is_proper(g: &Graph, phi: &Coloring) -> Result<Report, ColoringError> {
    phi.check_len(g.order())?;
    let mut report = Report::default();
    for &(u, v) in g.edges() {
        if phi.color(u) == phi.color(v) {
            report.push(Violation {
                kind: ViolationKind::NotProper { other: v },
                vertex: u,
                color: phi.color(u),
                count: 2,
            });
        }
    }
    Ok(report)
}

pub fn is_strong_odd(g: &Graph, phi: &Coloring) -> Result<Report, ColoringError> {
    let mut report = is_proper(g, phi)?;
    for v in 0..g.order() {
        for (color, count) in neighborhood_histogram(g, phi, v) {
            if count % 2 == 0 {
                report.push(Violation {
                    kind: ViolationKind::EvenColorInNeighborhood,
                    vertex: v,
                    color,
                    count,
                });
            }
        }
    }
    Ok(report)
}

pub fn is_odd(g: &Graph, phi: &Coloring) -> Result<Report, ColoringError> {
    let mut report = is_proper(g, phi)?;
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            continue;
        }
        let hist = neighborhood_histogram(g, phi, v);
        if hist.values().all(|c| c % 2 == 0) {
            // Report the smallest color seen, with its count.
            let (&color, &count) = hist.iter().next().unwrap();
            report.push(Violation {
                kind: ViolationKind::NoOddColor,
                vertex: v,
                color,
                count,
            });
        }
    }
    Ok(report)
}

pub fn is_square_coloring(g: &Graph, phi: &Coloring) -> Result<Report, ColoringError> {
    let mut report = is_proper(g, phi)?;
    let sq = square(g);
    for &(u, v) in sq.edges() {
        if !g.has_edge(u, v) && phi.color(u) == phi.color(v) {
            report.push(Violation {
                kind: ViolationKind::Distance2Clash { other: v },
                vertex: u,
                color: phi.color(u),
                count: 2,
            });
        }
    }
    Ok(report)
}

/// All four verdicts at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdicts {
    pub proper: Report,
    pub odd: Report,
    pub strong_odd: Report,
    pub square: Report,
}

pub fn verify_all(g: &Graph, phi: &Coloring) -> Result<Verdicts, ColoringError> {
    Ok(Verdicts {
        proper: is_proper(g, phi)?,
        odd: is_odd(g, phi)?,
        strong_odd: is_strong_odd(g, phi)?,
        square: is_square_coloring(g, phi)?,
    })
}

impl Verdicts {
    pub fn all_reports(&self) -> Report {
        let mut r = self.proper.clone();
        r.extend(self.odd.clone());
        r.extend(self.strong_odd.clone());
        r.extend(self.square.clone());
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite, make_cycle, make_path, make_star, Graph};
    use alloc::vec;

    fn c(v: &[usize]) -> Coloring {
        Coloring::new(v.to_vec())
    }

    #[test]
    fn proper_examples() {
        let c3 = make_complete(3).unwrap();
        assert!(is_proper(&c3, &c(&[0, 1, 2])).unwrap().holds());
        let r = is_proper(&c3, &c(&[0, 0, 1])).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation {
                kind: ViolationKind::NotProper { other: 1 },
                vertex: 0,
                color: 0,
                count: 2
            }]
        );
        let k23 = make_complete_bipartite(2, 3).unwrap();
        assert!(is_proper(&k23, &c(&[0, 0, 1, 1, 1])).unwrap().holds());
    }

    #[test]
    fn strong_odd_examples() {
        let c6 = make_cycle(6).unwrap();
        assert!(is_strong_odd(&c6, &c(&[0, 1, 2, 0, 1, 2])).unwrap().holds());
        let c4 = make_cycle(4).unwrap();
        let r = is_strong_odd(&c4, &c(&[0, 1, 0, 1])).unwrap();
        assert!(r.violations.contains(&Violation {
            kind: ViolationKind::EvenColorInNeighborhood,
            vertex: 0,
            color: 1,
            count: 2
        }));
        assert_eq!(r.violations.len(), 4);
        let k5 = make_complete(5).unwrap();
        assert!(is_strong_odd(&k5, &Coloring::rainbow(5)).unwrap().holds());
    }

    #[test]
    fn odd_examples() {
        assert!(is_odd(&make_cycle(5).unwrap(), &Coloring::rainbow(5)).unwrap().holds());
        let r = is_odd(&make_cycle(4).unwrap(), &c(&[0, 1, 0, 1])).unwrap();
        let vertices: Vec<usize> = r.violations.iter().map(|v| v.vertex).collect();
        assert_eq!(vertices, vec![0, 1, 2, 3]);
        assert!(r.violations.iter().all(|v| v.kind == ViolationKind::NoOddColor));
        // isolated vertices are exempt
        assert!(is_odd(&Graph::empty(3), &c(&[0, 0, 0])).unwrap().holds());
    }

    #[test]
    fn square_examples() {
        let p3 = make_path(3).unwrap();
        let r = is_square_coloring(&p3, &c(&[0, 1, 0])).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].kind, ViolationKind::Distance2Clash { other: 2 });
        assert!(is_square_coloring(&p3, &c(&[0, 1, 2])).unwrap().holds());
    }

    #[test]
    fn histogram() {
        let star = make_star(3).unwrap();
        let h = neighborhood_histogram(&star, &c(&[0, 1, 1, 1]), 0);
        assert_eq!(h.into_iter().collect::<Vec<_>>(), vec![(1, 3)]);
        assert!(neighborhood_histogram(&Graph::empty(1), &c(&[0]), 0).is_empty());
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            is_strong_odd(&make_cycle(3).unwrap(), &c(&[0, 1])),
            Err(ColoringError::LengthMismatch { colors: 2, vertices: 3 })
        );
    }

    #[test]
    fn renumbering() {
        let phi = c(&[5, 2, 5, 9]);
        assert_eq!(phi.k(), 10);
        assert_eq!(phi.distinct(), 3);
        assert_eq!(phi.canonical().colors(), &[0, 1, 0, 2]);
        assert_eq!(phi.compacted().colors(), &[1, 0, 1, 2]);
    }
}
