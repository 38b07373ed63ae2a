//! JSON file formats and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use strong_odd_core::plane::PlaneMultigraph;
use strong_odd_core::{Coloring, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] strong_odd_core::GraphError),
    #[error(transparent)]
    Map(#[from] strong_odd_core::MapError),
    #[error("edge ids must be 0..{count} with no gaps, found {found}")]
    EdgeIds { count: usize, found: usize },
    #[error("rotation key {0:?} is not a vertex id")]
    RotationKey(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    /// Canonical form: each edge as `[min, max]`, edges sorted.
    pub fn from_graph(g: &Graph) -> Self {
        let mut edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u.min(v), u.max(v)]).collect();
        edges.sort_unstable();
        GraphJson { n: g.order(), edges }
    }

    pub fn to_graph(&self) -> Result<Graph, IoError> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Ok(Graph::from_edges(self.n, &pairs)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringJson {
    pub colors: Vec<usize>,
}

impl From<&Coloring> for ColoringJson {
    fn from(phi: &Coloring) -> Self {
        ColoringJson {
            colors: phi.colors().to_vec(),
        }
    }
}

impl From<ColoringJson> for Coloring {
    fn from(c: ColoringJson) -> Self {
        Coloring::new(c.colors)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEdgeJson {
    pub id: usize,
    pub ends: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub n: usize,
    pub edges: Vec<MapEdgeJson>,
    /// Clockwise dart ids around each vertex; dart `2e` leaves `ends[0]`.
    pub rotation: BTreeMap<String, Vec<usize>>,
}

impl MapJson {
    pub fn from_map(m: &PlaneMultigraph) -> Self {
        let edges = m
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &ends)| MapEdgeJson { id, ends })
            .collect();
        let rotation = (0..m.order()).map(|v| (v.to_string(), m.rotation(v).to_vec())).collect();
        MapJson {
            n: m.order(),
            edges,
            rotation,
        }
    }

    pub fn to_map(&self) -> Result<PlaneMultigraph, IoError> {
        let mut edges = self.edges.clone();
        edges.sort_by_key(|e| e.id);
        if let Some((_, e)) = edges.iter().enumerate().find(|(i, e)| e.id != *i) {
            return Err(IoError::EdgeIds {
                count: edges.len(),
                found: e.id,
            });
        }
        let ends = edges.iter().map(|e| e.ends).collect();
        let mut rotation = vec![Vec::new(); self.n];
        for (key, darts) in &self.rotation {
            let v: usize = key.parse().map_err(|_| IoError::RotationKey(key.clone()))?;
            if v >= self.n {
                return Err(strong_odd_core::MapError::BadRotationVertex(v).into());
            }
            rotation[v] = darts.clone();
        }
        Ok(PlaneMultigraph::new(self.n, ends, rotation)?)
    }
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn parse_coloring(text: &str) -> Result<Coloring, IoError> {
    Ok(serde_json::from_str::<ColoringJson>(text)?.into())
}

pub fn parse_map(text: &str) -> Result<PlaneMultigraph, IoError> {
    serde_json::from_str::<MapJson>(text)?.to_map()
}

pub fn load_graph(path: &Path) -> Result<Graph, IoError> {
    parse_graph(&read_text(path)?)
}

pub fn load_coloring(path: &Path) -> Result<Coloring, IoError> {
    parse_coloring(&read_text(path)?)
}

pub fn load_map(path: &Path) -> Result<PlaneMultigraph, IoError> {
    parse_map(&read_text(path)?)
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("plain data serializes")
}

pub fn coloring_to_json(phi: &Coloring) -> String {
    serde_json::to_string(&ColoringJson::from(phi)).expect("plain data serializes")
}

pub fn map_to_json(m: &PlaneMultigraph) -> String {
    serde_json::to_string(&MapJson::from_map(m)).expect("plain data serializes")
}

pub fn save_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    write_text(path, &graph_to_json(g))
}

/// Undirected DOT text; vertices carry `color=<id>` when a coloring is given.
pub fn export_dot(g: &Graph, phi: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match phi {
            Some(phi) => writeln!(out, "  {v} [color={}];", phi.color(v)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use strong_odd_core::plane::fixtures;

    #[test]
    fn graph_round_trip_is_canonical() {
        let g = parse_graph(r#"{"n": 4, "edges": [[3, 2], [1, 0], [0, 3]]}"#).unwrap();
        assert_eq!(graph_to_json(&g), r#"{"n":4,"edges":[[0,1],[0,3],[2,3]]}"#);
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("{\"n\": 2"), Err(IoError::Json(_))));
        assert!(matches!(parse_graph(r#"{"n": 2, "edges": [[0, 2]]}"#), Err(IoError::Graph(_))));
        assert!(matches!(parse_graph(r#"{"n": 2, "edges": [[0, 1], [1, 0]]}"#), Err(IoError::Graph(_))));
        assert!(matches!(parse_graph(r#"{"n": 2, "edges": [[1, 1]]}"#), Err(IoError::Graph(_))));
    }

    #[test]
    fn map_round_trip() {
        for m in [fixtures::pentagon_triangle(), fixtures::wheel(5), fixtures::hexagonal_bipyramid().0] {
            let back = parse_map(&map_to_json(&m)).unwrap();
            assert_eq!(back, m);
        }
        let bad = r#"{"n": 2, "edges": [{"id": 1, "ends": [0, 1]}], "rotation": {"0": [2], "1": [3]}}"#;
        assert!(matches!(parse_map(bad), Err(IoError::EdgeIds { .. })));
        let bad = r#"{"n": 2, "edges": [{"id": 0, "ends": [0, 1]}], "rotation": {"0": [1], "1": [0]}}"#;
        assert!(matches!(parse_map(bad), Err(IoError::Map(_))));
    }

    #[test]
    fn coloring_and_dot() {
        let phi = parse_coloring(r#"{"colors": [0, 1, 0]}"#).unwrap();
        assert_eq!(coloring_to_json(&phi), r#"{"colors":[0,1,0]}"#);
        let g = parse_graph(r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#).unwrap();
        let dot = export_dot(&g, Some(&phi));
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("1 [color=1];"));
        assert!(dot.contains("1 -- 2;"));
    }
}
