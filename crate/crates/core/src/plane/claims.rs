use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{is_proper, Coloring};
use crate::error::MapError;

use super::blocks::blocks;
use super::PlaneMultigraph;

/// One color class after the decomposition: the map lives on the class's
/// vertices, `original[i]` is the input id of local vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClass {
    pub color: usize,
    pub map: PlaneMultigraph,
    pub original: Vec<usize>,
}

impl ColorClass {
    pub fn order(&self) -> usize {
        self.original.len()
    }
}

/// Splits a properly colored plane graph into one plane multigraph per
/// color class. For class `i`: drop edges avoiding `V_i`, repeatedly drop
/// vertices outside `V_i` of degree at most 1, then annihilate the rest of
/// the outside vertices in ascending id.
pub fn decompose_claim1(m: &PlaneMultigraph, phi: &Coloring) -> Result<Vec<ColorClass>, MapError> {
    phi.check_len(m.order())?;
    let g = m.underlying_graph();
    if !is_proper(&g, phi)?.holds() {
        return Err(MapError::ImproperColoring);
    }
    let k = if m.order() == 0 { 0 } else { phi.k() };
    let mut classes = Vec::with_capacity(k);
    for i in 0..k {
        let inside = |v: usize| phi.color(v) == i;
        let keep_edge: Vec<bool> = m.edges().iter().map(|&[u, w]| inside(u) || inside(w)).collect();
        let (mut cur, _, _) = m.restrict(&vec![true; m.order()], &keep_edge);
        let mut original: Vec<usize> = (0..m.order()).collect();

        loop {
            let keep: Vec<bool> = (0..cur.order())
                .map(|v| inside(original[v]) || cur.degree(v) >= 2)
                .collect();
            if keep.iter().all(|&k| k) {
                break;
            }
            let (next, vmap, _) = cur.restrict(&keep, &vec![true; cur.size()]);
            original = compose_ids(&original, &vmap);
            cur = next;
        }

        while let Some(v) = (0..cur.order()).find(|&v| !inside(original[v])) {
            let a = cur.annihilate_traced(v)?;
            original = compose_ids(&original, &a.vertex_map);
            cur = a.map;
        }

        let class = ColorClass { color: i, map: cur, original };
        check_claim1(m, phi, &class)?;
        classes.push(class);
    }
    Ok(classes)
}

fn compose_ids(original: &[usize], vmap: &[Option<usize>]) -> Vec<usize> {
    let mut out = vec![0; vmap.iter().flatten().count()];
    for (old, new) in vmap.iter().enumerate() {
        if let Some(new) = new {
            out[*new] = original[old];
        }
    }
    out
}

/// Distinct sets `N(x) ∩ V_i` with at least two elements, in local ids.
pub fn claim1_targets(m: &PlaneMultigraph, class: &ColorClass) -> Vec<Vec<usize>> {
    let g = m.underlying_graph();
    let mut local = vec![usize::MAX; m.order()];
    for (i, &v) in class.original.iter().enumerate() {
        local[v] = i;
    }
    let mut out = BTreeSet::new();
    for x in 0..g.order() {
        let mut set: Vec<usize> = g
            .neighbors(x)
            .iter()
            .filter(|&&w| local[w] != usize::MAX)
            .map(|&w| local[w])
            .collect();
        if set.len() >= 2 {
            set.sort_unstable();
            out.insert(set);
        }
    }
    out.into_iter().collect()
}

/// Every vertex with at least two neighbours in the class sees them as the
/// vertex set of one face of the class map.
pub fn check_claim1(m: &PlaneMultigraph, phi: &Coloring, class: &ColorClass) -> Result<(), MapError> {
    if class.original.iter().any(|&v| phi.color(v) != class.color) {
        return Err(MapError::Postcondition(format!(
            "class {} contains a vertex of another color",
            class.color
        )));
    }
    let expected = phi.colors().iter().filter(|&&c| c == class.color).count();
    if expected != class.order() {
        return Err(MapError::Postcondition(format!(
            "class {} has {} vertices, the coloring has {expected}",
            class.color,
            class.order()
        )));
    }
    let faces = class.map.trace_faces();
    for set in claim1_targets(m, class) {
        if !faces.has_vertex_set(&set) {
            return Err(MapError::Postcondition(format!(
                "class {}: no face has vertex set {set:?}",
                class.color
            )));
        }
    }
    Ok(())
}

fn face_sets(m: &PlaneMultigraph) -> BTreeSet<Vec<usize>> {
    m.trace_faces().boundary_vertices.into_iter().collect()
}

fn keeps_all(m: &PlaneMultigraph, required: &BTreeSet<Vec<usize>>) -> bool {
    let have = face_sets(m);
    required.iter().all(|s| have.contains(s))
}

/// Adds edges until the map is 2-connected while every face vertex set of
/// the input survives as the vertex set of some face.
pub fn augment_claim2(m: &PlaneMultigraph) -> Result<PlaneMultigraph, MapError> {
    let required: Vec<Vec<usize>> = face_sets(m).into_iter().collect();
    augment_claim2_with(m, &required)
}

/// As [`augment_claim2`], preserving only the given (sorted) vertex sets.
pub fn augment_claim2_with(m: &PlaneMultigraph, required: &[Vec<usize>]) -> Result<PlaneMultigraph, MapError> {
    if m.order() < 3 {
        return Err(MapError::TooFewVertices);
    }
    let required: BTreeSet<Vec<usize>> = required.iter().cloned().collect();
    if !keeps_all(m, &required) {
        return Err(MapError::Postcondition("required face sets are not faces of the input".into()));
    }
    let mut cur = m.clone();

    // Join the two components with the smallest vertices through a pair of
    // faces whose loss keeps every required set.
    loop {
        let comps = cur.components();
        if comps.len() <= 1 {
            break;
        }
        let faces = cur.trace_faces();
        let corners = |comp: &[usize]| -> Vec<(usize, Option<usize>)> {
            if comp.len() == 1 && cur.degree(comp[0]) == 0 {
                return vec![(comp[0], None)];
            }
            faces
                .faces
                .iter()
                .filter(|f| comp.binary_search(&cur.vertex_of(f[0])).is_ok())
                .map(|f| (cur.vertex_of(f[0]), Some(f[0])))
                .collect()
        };
        let (left, right) = (corners(&comps[0]), corners(&comps[1]));
        let joined = left
            .iter()
            .flat_map(|&a| right.iter().map(move |&b| (a, b)))
            .map(|((u, cu), (w, cw))| cur.insert_edge(u, cu, w, cw))
            .find(|next| keeps_all(next, &required));
        cur = joined.ok_or(MapError::NoExpendableFace)?;
    }

    // Merge an end block into its neighbour across a face on which the cut
    // vertex repeats; the new triangle leaves that face's vertex set intact.
    loop {
        let b = blocks(&cur);
        if b.cut_vertices.is_empty() {
            break;
        }
        let (bi, v) = *b.end_blocks().first().ok_or_else(|| {
            MapError::Postcondition("block tree without an end block".into())
        })?;
        let block = &b.blocks[bi];
        let in_b = |x: usize| x != v && block.vertices.binary_search(&x).is_ok();
        let faces = cur.trace_faces();
        let pair = faces.faces.iter().find_map(|f| {
            (0..f.len()).find_map(|j| {
                let (d1, d2) = (f[j], f[(j + 1) % f.len()]);
                let (x, y) = (cur.vertex_of(d1), cur.head(d2));
                (cur.vertex_of(d2) == v && in_b(x) != in_b(y)).then_some((d1, d2))
            })
        });
        let (d1, d2) = pair.ok_or_else(|| MapError::Postcondition(format!("no face crosses cut vertex {v}")))?;
        let d3 = cur.face_next(d2);
        let next = cur.insert_edge(cur.vertex_of(d1), Some(d1), cur.vertex_of(d3), Some(d3));
        if !keeps_all(&next, &required) {
            return Err(MapError::Postcondition(format!("bridging at cut vertex {v} lost a required face")));
        }
        if blocks(&next).blocks.len() >= b.blocks.len() {
            return Err(MapError::Postcondition(format!("bridging at cut vertex {v} did not merge blocks")));
        }
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::fixtures;

    #[test]
    fn bipyramid_classes() {
        let (m, phi) = fixtures::hexagonal_bipyramid();
        let classes = decompose_claim1(&m, &phi).unwrap();
        assert_eq!(classes.len(), 3);
        assert_eq!(classes[0].original, vec![0, 2, 4]);
        assert_eq!(classes[1].original, vec![1, 3, 5]);
        assert_eq!(classes[2].original, vec![6, 7]);
        // six hexagon vertices each leave a digon between the poles
        assert_eq!(classes[2].map.size(), 12);
        assert_eq!(classes[2].map.trace_faces().len(), 12);
        let faces = classes[0].map.trace_faces();
        assert!(faces.has_vertex_set(&[0, 1, 2]));
        assert!(faces.has_vertex_set(&[0, 1]));
    }

    #[test]
    fn trivial_classes() {
        let m = PlaneMultigraph::empty(4);
        let classes = decompose_claim1(&m, &Coloring::new(vec![0; 4])).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].map.order(), 4);
        assert_eq!(classes[0].map.size(), 0);

        let t = PlaneMultigraph::triangle();
        let classes = decompose_claim1(&t, &Coloring::rainbow(3)).unwrap();
        assert!(classes.iter().all(|c| c.map.order() == 1 && c.map.size() == 0));

        assert_eq!(
            decompose_claim1(&t, &Coloring::new(vec![0, 0, 1])),
            Err(MapError::ImproperColoring)
        );
    }

    #[test]
    fn augmentation_adds_the_separating_chord() {
        let m = fixtures::pentagon_triangle();
        let out = augment_claim2(&m).unwrap();
        assert_eq!(out.size(), m.size() + 1);
        assert_eq!(out.ends(m.size()), [2, 3]);
        assert!(out.is_biconnected());
        assert_eq!(out.rotation_signature(), fixtures::pentagon_triangle_chorded().rotation_signature());
        let faces = out.trace_faces();
        assert!(faces.has_vertex_set(&[0, 2, 3]));
        assert!(faces.has_vertex_set(&[0, 1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn two_triangles() {
        let m = PlaneMultigraph::from_rotation_neighbors(&[
            vec![1, 2],
            vec![2, 0],
            vec![0, 1],
            vec![4, 5],
            vec![5, 3],
            vec![3, 4],
        ])
        .unwrap();
        let sets = face_sets(&m);
        let out = augment_claim2(&m).unwrap();
        assert!(out.is_biconnected());
        assert!(out.satisfies_euler());
        assert!(sets.iter().all(|s| out.trace_faces().has_vertex_set(s)));
    }

    #[test]
    fn unchanged_when_biconnected() {
        let (m, _) = fixtures::hexagonal_bipyramid();
        assert_eq!(augment_claim2(&m).unwrap(), m);
        assert_eq!(
            augment_claim2(&PlaneMultigraph::empty(2)),
            Err(MapError::TooFewVertices)
        );
    }

    #[test]
    fn isolated_vertices_get_attached() {
        let mut rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        rot.push(Vec::new());
        rot.push(Vec::new());
        let m = PlaneMultigraph::from_rotation_neighbors(&rot).unwrap();
        let out = augment_claim2_with(&m, &[vec![0, 1, 2]]).unwrap();
        assert!(out.is_biconnected());
        assert!(out.trace_faces().has_vertex_set(&[0, 1, 2]));
    }
}
