//! Named extremal graphs with their expected parameters and the adjacency
//! facts their optimality arguments rely on.
//!
//! Vertices are written `v1, v2, …` in labels and stored 0-based.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::Coloring;
use crate::constructive::c5_box_c5_table;
use crate::error::GraphError;
use crate::graph::{join, make_cycle, make_path, Graph};
use crate::plane::PlaneMultigraph;
use crate::product::{product, ProductKind};
use crate::solver::Param;

pub const GALLERY_NAMES: [&str; 4] = ["G12a", "G12b", "G7", "C5boxC5"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Exact(usize),
    AtMost(usize),
}

impl Expected {
    pub fn accepts(self, value: usize) -> bool {
        match self {
            Expected::Exact(x) => value == x,
            Expected::AtMost(x) => value <= x,
        }
    }

    pub fn bound(self) -> usize {
        match self {
            Expected::Exact(x) | Expected::AtMost(x) => x,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(x) => write!(f, "= {x}"),
            Expected::AtMost(x) => write!(f, "<= {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintKind {
    Order(usize),
    Diameter(usize),
    Edge(usize, usize),
    NonEdge(usize, usize),
    /// `N(v)` equals the set exactly.
    Neighborhood(usize, Vec<usize>),
    /// Neighbours of `v` with a smaller index are exactly the set.
    EarlierNeighbors(usize, Vec<usize>),
}

fn names(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|v| format!("v{}", v + 1)).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintKind::Order(n) => write!(f, "order {n}"),
            ConstraintKind::Diameter(d) => write!(f, "diameter {d}"),
            ConstraintKind::Edge(u, v) => write!(f, "v{}v{} is an edge", u + 1, v + 1),
            ConstraintKind::NonEdge(u, v) => write!(f, "v{}v{} is not an edge", u + 1, v + 1),
            ConstraintKind::Neighborhood(v, s) => write!(f, "N(v{}) = {}", v + 1, names(s)),
            ConstraintKind::EarlierNeighbors(v, s) => {
                write!(f, "N(v{}) ∩ {{v1..v{}}} = {}", v + 1, v, names(s))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    /// Where in the optimality argument the fact is used.
    pub label: String,
    pub kind: ConstraintKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub embedding: Option<PlaneMultigraph>,
    pub expected: Vec<(Param, Expected)>,
    pub constraints: Vec<Constraint>,
    /// A coloring attaining the expected strong odd value, when one is known
    /// in closed form.
    pub witness: Option<Coloring>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintFailure {
    pub label: String,
    pub fact: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintReport {
    pub checked: usize,
    pub failures: Vec<ConstraintFailure>,
}

impl ConstraintReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// 1-based upper adjacency lists → graph.
fn from_upper(n: usize, upper: &[(usize, &[usize])]) -> Graph {
    let edges: Vec<(usize, usize)> = upper
        .iter()
        .flat_map(|&(u, ws)| ws.iter().map(move |&w| (u - 1, w - 1)))
        .collect();
    Graph::from_edges(n, &edges).expect("gallery data is a simple graph")
}

fn embed(rotation: &[&[usize]]) -> PlaneMultigraph {
    let lists: Vec<Vec<usize>> = rotation.iter().map(|r| r.to_vec()).collect();
    PlaneMultigraph::from_rotation_neighbors(&lists).expect("gallery embedding is valid")
}

fn c(label: &str, kind: ConstraintKind) -> Constraint {
    Constraint { label: label.to_string(), kind }
}

/// 1-based helpers for transcribing constraints.
fn e(u: usize, v: usize) -> ConstraintKind {
    ConstraintKind::Edge(u - 1, v - 1)
}

fn earlier(v: usize, set: &[usize]) -> ConstraintKind {
    ConstraintKind::EarlierNeighbors(v - 1, set.iter().map(|x| x - 1).collect())
}

fn nbhd(v: usize, set: &[usize]) -> ConstraintKind {
    ConstraintKind::Neighborhood(v - 1, set.iter().map(|x| x - 1).collect())
}

fn triangle_123(step: &str) -> Vec<Constraint> {
    vec![c(step, e(1, 2)), c(step, e(1, 3)), c(step, e(2, 3))]
}

fn g12a() -> GalleryEntry {
    let graph = from_upper(
        12,
        &[
            (1, &[2, 3, 4, 5, 6]),
            (2, &[3, 6, 7]),
            (3, &[4, 5, 7, 8, 9, 10]),
            (4, &[5]),
            (5, &[6, 9, 10, 11, 12]),
            (6, &[7, 12]),
            (7, &[8, 9, 11, 12]),
            (8, &[9]),
            (9, &[10, 11]),
        ],
    );
    let embedding = embed(&[
        &[1, 5, 4, 3, 2],
        &[0, 2, 6, 5],
        &[1, 0, 3, 4, 9, 8, 7, 6],
        &[2, 0, 4],
        &[3, 0, 5, 11, 10, 8, 9, 2],
        &[4, 0, 1, 6, 11],
        &[5, 1, 2, 7, 8, 10, 11],
        &[6, 2, 8],
        &[7, 2, 9, 4, 10, 6],
        &[8, 2, 4],
        &[8, 4, 6],
        &[6, 4, 5],
    ]);
    let mut constraints = vec![c("size of the graph", ConstraintKind::Order(12)), c("size of the graph", ConstraintKind::Diameter(2))];
    constraints.extend(triangle_123("first three colors forced"));
    constraints.extend([
        c("v4 step: parity at v1", nbhd(1, &[2, 3, 4, 5, 6])),
        c("v4 step: parity at v1", e(4, 5)),
        c("v4 step: parity at v1", e(2, 6)),
        c("v5 step: parity at v1", e(5, 6)),
        c("v7 step: parity at v3", nbhd(3, &[1, 2, 4, 5, 7, 8, 9, 10])),
        c("v7 step: neighbours of v7", e(7, 8)),
        c("v7 step: neighbours of v7", e(7, 9)),
        c("v7 step: neighbours of v7", e(7, 11)),
        c("v7 step: neighbours of v7", e(7, 12)),
        c("v7 step: color 5 excluded at v10", e(5, 10)),
        c("v9 step: parity at v3", e(9, 10)),
        c("v9 step: parity at v7", e(9, 11)),
        c("v9 step: parity at v7", e(6, 12)),
        c("v11 step: parity at v5 and v7", e(6, 12)),
        c("v4 step: adjacency exclusions", earlier(4, &[1, 3])),
        c("v5 step: adjacency exclusions", earlier(5, &[1, 3, 4])),
        c("v6 step: adjacency exclusions", earlier(6, &[1, 2, 5])),
        c("v7 step: adjacency exclusions", earlier(7, &[2, 3, 6])),
        c("v8 step: adjacency exclusions", earlier(8, &[3, 7])),
        c("v9 step: adjacency exclusions", earlier(9, &[3, 5, 7, 8])),
        c("v10 step: adjacency exclusions", earlier(10, &[3, 5, 9])),
        c("v11 step: adjacency exclusions", earlier(11, &[5, 7, 9])),
        c("v12 step: neighbours of v12", nbhd(12, &[5, 6, 7])),
    ]);
    GalleryEntry {
        name: "G12a",
        graph,
        embedding: Some(embedding),
        expected: vec![(Param::StrongOdd, Expected::Exact(12)), (Param::Square, Expected::Exact(12))],
        constraints,
        witness: Some(Coloring::rainbow(12)),
    }
}

fn g12b() -> GalleryEntry {
    let graph = from_upper(
        12,
        &[
            (1, &[2, 3, 4, 5, 6]),
            (2, &[3, 6, 11]),
            (3, &[4, 7, 8, 10, 11]),
            (4, &[5, 7, 8]),
            (5, &[6, 7]),
            (6, &[7, 9, 11, 12]),
            (7, &[8, 9, 10, 12]),
            (9, &[10, 12]),
        ],
    );
    let embedding = embed(&[
        &[1, 5, 4, 3, 2],
        &[0, 2, 10, 5],
        &[1, 0, 3, 7, 6, 9, 10],
        &[2, 0, 4, 6, 7],
        &[3, 0, 5, 6],
        &[4, 0, 1, 10, 8, 11, 6],
        &[5, 11, 8, 9, 2, 7, 3, 4],
        &[6, 2, 3],
        &[6, 11, 5, 9],
        &[8, 2, 6],
        &[5, 1, 2],
        &[8, 6, 5],
    ]);
    let mut constraints = vec![c("size of the graph", ConstraintKind::Order(12)), c("size of the graph", ConstraintKind::Diameter(2))];
    constraints.extend(triangle_123("first three colors forced"));
    constraints.extend([
        c("v4 step: parity at v1", e(4, 5)),
        c("v4 step: parity at v1", e(2, 6)),
        c("v5 step: parity at v1", e(5, 6)),
        c("v7 step: parity at v6", e(2, 11)),
        c("v8 step: parity at v7", e(6, 12)),
        c("v8 step: parity at v7", e(9, 12)),
        c("v9 step: parity at v7", e(9, 10)),
        c("v4 step: adjacency exclusions", earlier(4, &[1, 3])),
        c("v5 step: adjacency exclusions", earlier(5, &[1, 4])),
        c("v6 step: adjacency exclusions", earlier(6, &[1, 2, 5])),
        c("v7 step: adjacency exclusions", earlier(7, &[3, 4, 5, 6])),
        c("v8 step: adjacency exclusions", earlier(8, &[3, 4, 7])),
        c("v9 step: adjacency exclusions", earlier(9, &[6, 7])),
        c("v10 step: adjacency exclusions", earlier(10, &[3, 7, 9])),
        c("v11 step: adjacency exclusions", earlier(11, &[2, 3, 6])),
        c("v12 step: neighbours of v12", nbhd(12, &[6, 7, 9])),
    ]);
    GalleryEntry {
        name: "G12b",
        graph,
        embedding: Some(embedding),
        expected: vec![(Param::StrongOdd, Expected::Exact(12)), (Param::Square, Expected::Exact(12))],
        constraints,
        witness: Some(Coloring::rainbow(12)),
    }
}

fn g7() -> GalleryEntry {
    let graph = join(&Graph::empty(1), &make_path(6).expect("P6"));
    let embedding = embed(&[
        &[1, 6, 5, 4, 3, 2],
        &[0, 2],
        &[1, 0, 3],
        &[2, 0, 4],
        &[3, 0, 5],
        &[4, 0, 6],
        &[5, 0],
    ]);
    let mut constraints = vec![
        c("apex plus path", ConstraintKind::Order(7)),
        c("apex plus path", nbhd(1, &[2, 3, 4, 5, 6, 7])),
    ];
    for i in 2..7 {
        constraints.push(c("path v2..v7", e(i, i + 1)));
    }
    constraints.push(c("path v2..v7", ConstraintKind::NonEdge(1, 3)));
    GalleryEntry {
        name: "G7",
        graph,
        embedding: Some(embedding),
        expected: vec![(Param::StrongOdd, Expected::Exact(7)), (Param::Square, Expected::Exact(7))],
        constraints,
        witness: Some(Coloring::rainbow(7)),
    }
}

fn c5_box_c5() -> GalleryEntry {
    let c5 = make_cycle(5).expect("C5");
    let graph = product(&c5, &c5, ProductKind::Cartesian).expect("nonempty factors");
    GalleryEntry {
        name: "C5boxC5",
        graph,
        embedding: None,
        expected: vec![(Param::StrongOdd, Expected::AtMost(5))],
        constraints: vec![
            c("cartesian square of C5", ConstraintKind::Order(25)),
            c("cartesian square of C5", ConstraintKind::Diameter(4)),
        ],
        witness: Some(c5_box_c5_table()),
    }
}

pub fn gallery(name: &str) -> Result<GalleryEntry, GraphError> {
    match name {
        "G12a" => Ok(g12a()),
        "G12b" => Ok(g12b()),
        "G7" => Ok(g7()),
        "C5boxC5" => Ok(c5_box_c5()),
        other => Err(GraphError::UnknownGalleryEntry(other.to_string())),
    }
}

fn holds(g: &Graph, kind: &ConstraintKind) -> bool {
    let n = g.order();
    let in_range = |v: &usize| *v < n;
    match kind {
        ConstraintKind::Order(k) => n == *k,
        ConstraintKind::Diameter(d) => g.diameter() == Some(*d),
        ConstraintKind::Edge(u, v) => in_range(u) && in_range(v) && g.has_edge(*u, *v),
        ConstraintKind::NonEdge(u, v) => in_range(u) && in_range(v) && !g.has_edge(*u, *v),
        ConstraintKind::Neighborhood(v, s) => in_range(v) && g.neighbors(*v) == s.as_slice(),
        ConstraintKind::EarlierNeighbors(v, s) => {
            in_range(v) && g.neighbors(*v).iter().copied().filter(|w| w < v).eq(s.iter().copied())
        }
    }
}

/// Checks every listed fact, plus that the embedding (if any) realises the
/// graph and satisfies Euler's formula.
pub fn check_structural_constraints(entry: &GalleryEntry) -> ConstraintReport {
    let mut report = ConstraintReport::default();
    for con in &entry.constraints {
        report.checked += 1;
        if !holds(&entry.graph, &con.kind) {
            report.failures.push(ConstraintFailure {
                label: con.label.clone(),
                fact: con.kind.to_string(),
            });
        }
    }
    if let Some(map) = &entry.embedding {
        report.checked += 1;
        if map.underlying_graph() != entry.graph || !map.satisfies_euler() {
            report.failures.push(ConstraintFailure {
                label: "embedding".to_string(),
                fact: "rotation system realises the graph with n - m + f = 2".to_string(),
            });
        }
    }
    report
}
