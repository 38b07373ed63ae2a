use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::Coloring;
use crate::error::ConstructError;
use crate::graph::Graph;

use super::Constructed;

const UNSET: usize = usize::MAX;

/// BFS rooting of a tree (or of the part of a graph hanging off `root`
/// away from a blocked vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTreePlan {
    pub root: usize,
    /// `parent[v]` for every reached non-root vertex.
    pub parent: Vec<Option<usize>>,
    pub bfs_order: Vec<usize>,
    pub children: Vec<Vec<usize>>,
}

impl RootedTreePlan {
    pub fn bfs(g: &Graph, root: usize) -> Self {
        Self::bfs_avoiding(g, root, None)
    }

    pub(crate) fn bfs_avoiding(g: &Graph, root: usize, blocked: Option<usize>) -> Self {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut children = vec![Vec::new(); n];
        let mut bfs_order = vec![root];
        seen[root] = true;
        if let Some(b) = blocked {
            seen[b] = true;
        }
        let mut i = 0;
        while i < bfs_order.len() {
            let v = bfs_order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    children[v].push(w);
                    bfs_order.push(w);
                }
            }
        }
        RootedTreePlan {
            root,
            parent,
            bfs_order,
            children,
        }
    }
}

pub fn is_odd_tree(t: &Graph) -> bool {
    (0..t.order()).all(|v| t.degree(v) % 2 == 1)
}

fn third(palette: [usize; 3], a: usize, b: usize) -> usize {
    palette.into_iter().find(|&c| c != a && c != b).unwrap()
}

/// Colors every non-root vertex of `plan` from `palette`, assuming the root
/// and its children are already colored. Even number of children: they all
/// copy the grandparent's color. Odd: one child takes the remaining palette
/// color and the rest copy the grandparent.
fn spread_below(plan: &RootedTreePlan, colors: &mut [usize], palette: [usize; 3], steps: &mut u64) {
    for &v in plan.bfs_order.iter().skip(1) {
        *steps += 1;
        let kids = &plan.children[v];
        if kids.is_empty() {
            continue;
        }
        let p = plan.parent[v].expect("non-root vertex has a parent");
        let (cv, cp) = (colors[v], colors[p]);
        for (i, &w) in kids.iter().enumerate() {
            *steps += 1;
            colors[w] = if kids.len() % 2 == 1 && i == 0 {
                third(palette, cv, cp)
            } else {
                cp
            };
        }
    }
}

/// Strong odd coloring of a tree with 2 colors when every degree is odd and
/// 3 otherwise; root is vertex 0.
pub fn color_tree(t: &Graph) -> Result<Constructed, ConstructError> {
    if !t.is_tree() {
        return Err(ConstructError::NotATree);
    }
    let n = t.order();
    let plan = RootedTreePlan::bfs(t, 0);
    let mut colors = vec![UNSET; n];
    let mut steps = 1;
    colors[0] = 0;
    let root_kids = &plan.children[0];
    let odd_root = root_kids.len() % 2 == 1;
    for (i, &w) in root_kids.iter().enumerate() {
        steps += 1;
        colors[w] = if !odd_root && i == 0 { 2 } else { 1 };
    }
    spread_below(&plan, &mut colors, [0, 1, 2], &mut steps);
    let mut out = Constructed::new(Coloring::new(colors));
    out.steps = steps;
    out.note(format!(
        "root 0 has degree {} ({})",
        root_kids.len(),
        if odd_root || root_kids.is_empty() { "monochromatic neighbourhood" } else { "one neighbour gets color 2" }
    ));
    out.note(format!("odd tree: {}", is_odd_tree(t)));
    Ok(out)
}

pub(crate) fn color_hanging_tree(
    g: &Graph,
    root: usize,
    blocked: Option<usize>,
    root_color: usize,
    palette: [usize; 3],
    colors: &mut [usize],
    steps: &mut u64,
) -> usize {
    let plan = RootedTreePlan::bfs_avoiding(g, root, blocked);
    colors[root] = root_color;
    let others: Vec<usize> = palette.into_iter().filter(|&c| c != root_color).collect();
    let kids = &plan.children[root];
    for (i, &w) in kids.iter().enumerate() {
        *steps += 1;
        // The blocked parent contributes one occurrence of a non-palette
        // color, so the children alone must be odd per color.
        colors[w] = if kids.len().is_multiple_of(2) && i + 1 == kids.len() {
            others[1]
        } else {
            others[0]
        };
    }
    spread_below(&plan, colors, palette, steps);
    kids.len()
}

/// Colors tree `t` from `palette` as if `root` had one extra neighbour
/// outside `t` colored `forbidden_color`.
pub fn color_tree_constrained(
    t: &Graph,
    root: usize,
    root_color: usize,
    forbidden_color: usize,
    palette: [usize; 3],
) -> Result<Constructed, ConstructError> {
    if !t.is_tree() {
        return Err(ConstructError::NotATree);
    }
    if root >= t.order() {
        return Err(ConstructError::BadRoot(root));
    }
    if palette[0] == palette[1] || palette[1] == palette[2] || palette[0] == palette[2] {
        return Err(ConstructError::Palette(format!("palette {palette:?} repeats a color")));
    }
    if !palette.contains(&root_color) {
        return Err(ConstructError::Palette(format!(
            "root color {root_color} is not in {palette:?}"
        )));
    }
    if palette.contains(&forbidden_color) {
        return Err(ConstructError::Palette(format!(
            "forbidden color {forbidden_color} is in {palette:?}"
        )));
    }
    let mut colors = vec![UNSET; t.order()];
    let mut steps = 1;
    let m = color_hanging_tree(t, root, None, root_color, palette, &mut colors, &mut steps);
    let mut out = Constructed::new(Coloring::new(colors));
    out.steps = steps;
    out.note(format!(
        "root {root} color {root_color}, {m} children ({})",
        if m.is_multiple_of(2) && m > 0 { "split m-1 / 1" } else { "monochromatic" }
    ));
    Ok(out)
}
