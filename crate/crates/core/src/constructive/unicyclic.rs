use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::ConstructError;
use crate::graph::Graph;

use super::cycle::color_cycle;
use super::tree::{color_hanging_tree, RootedTreePlan};
use super::Constructed;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicycleDecomposition {
    /// The unique cycle in traversal order, starting at its smallest vertex.
    pub cycle: Vec<usize>,
    /// Cycle vertex → its pendant trees, each listed root first in BFS order.
    pub pendant_trees: BTreeMap<usize, Vec<Vec<usize>>>,
}

impl UnicycleDecomposition {
    pub fn pendant_roots(&self, a: usize) -> Vec<usize> {
        self.pendant_trees
            .get(&a)
            .map(|trees| trees.iter().map(|t| t[0]).collect())
            .unwrap_or_default()
    }
}

pub fn decompose_unicyclic(g: &Graph) -> Result<UnicycleDecomposition, ConstructError> {
    let n = g.order();
    if n < 3 || g.size() != n || !g.is_connected() {
        return Err(ConstructError::NotUnicyclic);
    }
    // Strip leaves until only the cycle remains.
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let on_cycle: Vec<bool> = removed.iter().map(|r| !r).collect();
    let start = (0..n).find(|&v| on_cycle[v]).ok_or(ConstructError::NotUnicyclic)?;
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_cycle[w] && w != prev)
            .ok_or(ConstructError::NotUnicyclic)?;
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
        if cycle.len() > n {
            return Err(ConstructError::NotUnicyclic);
        }
    }
    if cycle.len() != on_cycle.iter().filter(|&&c| c).count() {
        return Err(ConstructError::NotUnicyclic);
    }
    let mut pendant_trees = BTreeMap::new();
    for &a in &cycle {
        let trees: Vec<Vec<usize>> = g
            .neighbors(a)
            .iter()
            .filter(|&&x| !on_cycle[x])
            .map(|&x| RootedTreePlan::bfs_avoiding(g, x, Some(a)).bfs_order)
            .collect();
        if !trees.is_empty() {
            pendant_trees.insert(a, trees);
        }
    }
    Ok(UnicycleDecomposition { cycle, pendant_trees })
}

fn palette_without(c: usize) -> [usize; 3] {
    let mut p = [0; 3];
    let mut i = 0;
    for x in 0..4 {
        if x != c {
            p[i] = x;
            i += 1;
        }
    }
    p
}

/// Strong odd coloring with at most 4 colors of a connected unicyclic graph
/// other than the bare `C_5` (which gets 5).
pub fn color_unicyclic(g: &Graph) -> Result<Constructed, ConstructError> {
    let d = decompose_unicyclic(g)?;
    let len = d.cycle.len();
    let base = color_cycle(len)?;
    let mut colors = vec![usize::MAX; g.order()];
    let mut out = Constructed::new(Coloring::new(Vec::new()));
    out.steps = base.steps;
    out.provenance = base.provenance;

    if d.pendant_trees.is_empty() {
        for (i, &v) in d.cycle.iter().enumerate() {
            colors[v] = base.coloring.color(i);
        }
        out.note(format!("bare cycle of length {len}"));
        out.coloring = Coloring::new(colors);
        return Ok(out);
    }

    let mut cycle = d.cycle.clone();
    // For C5 the first vertex with pendant trees plays the special role.
    let special = if len == 5 {
        let pos = cycle.iter().position(|v| d.pendant_trees.contains_key(v)).unwrap();
        cycle.rotate_left(pos);
        Some(cycle[0])
    } else {
        None
    };
    for (i, &v) in cycle.iter().enumerate() {
        colors[v] = if special.is_some() { i } else { base.coloring.color(i) };
    }
    let at = |i: usize| cycle[i % len];

    if let Some(a) = special {
        let roots = d.pendant_roots(a);
        let m = roots.len();
        let e = at(4);
        colors[e] = colors[at(1)];
        for (i, &x) in roots.iter().enumerate() {
            out.steps += 1;
            colors[x] = if m % 2 == 0 && i + 1 == m { colors[at(2)] } else { colors[at(1)] };
        }
        out.note(format!(
            "C5 with pendant trees at {a}: temporary color 4 on {e}, then recolored to {}; |N*({a})| = {m} ({})",
            colors[e],
            if m % 2 == 0 { "case 1: split m-1 / 1" } else { "case 2: monochromatic" }
        ));
    }

    for (i, &a) in cycle.iter().enumerate() {
        if Some(a) == special {
            continue;
        }
        let roots = d.pendant_roots(a);
        if roots.is_empty() {
            continue;
        }
        let (b, c) = (at(i + 1), at(i + len - 1));
        let fourth = (0..4)
            .find(|x| ![colors[a], colors[b], colors[c]].contains(x))
            .unwrap();
        let m = roots.len();
        let pick = if m % 2 == 0 { colors[b] } else { fourth };
        for &x in &roots {
            out.steps += 1;
            colors[x] = pick;
        }
        out.note(format!(
            "vertex {a}: |N*| = {m}, pendant roots colored {pick} ({})",
            if m % 2 == 0 { "color of cycle neighbour" } else { "fourth color" }
        ));
    }

    for &a in &cycle {
        for x in d.pendant_roots(a) {
            let palette = palette_without(colors[a]);
            let root_color = colors[x];
            color_hanging_tree(g, x, Some(a), root_color, palette, &mut colors, &mut out.steps);
            out.note(format!("tree at {x} (attached to {a}): palette {palette:?}"));
        }
    }
    debug_assert!(colors.iter().all(|&c| c < 4));
    out.coloring = Coloring::new(colors);
    Ok(out)
}
