//! Seeded random corpora with the per-family property checks.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;
use strong_odd_core::coloring::is_strong_odd;
use strong_odd_core::constructive::{color_tree, color_unicyclic, is_odd_tree};
use strong_odd_core::plane::{check_claim1, decompose_claim1, strong_odd_via_planar, PlaneMultigraph};
use strong_odd_core::solver::oracle::{brute_force_param, MAX_ORDER};
use strong_odd_core::{Budget, Graph, Param, Solver};

use crate::generate::{gnp, item_rng, random_plane_map, random_tree, random_unicyclic};
use crate::io::{self, IoError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Tree,
    Unicyclic,
    PlanarEmbedded,
    General,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Tree, Family::Unicyclic, Family::PlanarEmbedded, Family::General];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Unicyclic => "unicyclic",
            Family::PlanarEmbedded => "planar_embedded",
            Family::General => "general",
        }
    }

    fn min_order(self) -> usize {
        match self {
            Family::Tree | Family::General => 1,
            Family::Unicyclic | Family::PlanarEmbedded => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || (s == "planar" && *f == Family::PlanarEmbedded))
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// One generated instance in a corpus.
pub enum Instance {
    Graph(Graph),
    Map(PlaneMultigraph),
}

impl Instance {
    pub fn graph(&self) -> Graph {
        match self {
            Instance::Graph(g) => g.clone(),
            Instance::Map(m) => m.underlying_graph(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Instance::Graph(g) => io::graph_to_json(g),
            Instance::Map(m) => io::map_to_json(m),
        }
    }
}

/// Item `index` of the corpus `(family, seed)` with orders in `min..=size`.
pub fn instance(family: Family, seed: u64, index: u64, size: usize) -> Instance {
    let mut rng = item_rng(seed, index);
    let n = rng.gen_range(family.min_order()..=size.max(family.min_order()));
    match family {
        Family::Tree => Instance::Graph(random_tree(n, &mut rng)),
        Family::Unicyclic => Instance::Graph(random_unicyclic(n, &mut rng)),
        Family::General => {
            let p = rng.gen_range(0.15..0.75);
            Instance::Graph(gnp(n, p, &mut rng))
        }
        Family::PlanarEmbedded => {
            let drop = rng.gen_range(0.0..0.4);
            Instance::Map(random_plane_map(n, drop, &mut rng))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ItemResult {
    pub index: u64,
    pub n: usize,
    pub m: usize,
    pub pass: bool,
    /// Facts established or violated, one per line.
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub family: Family,
    pub seed: u64,
    pub count: u64,
    pub size: usize,
    pub passed: u64,
    pub items: Vec<ItemResult>,
}

impl CorpusSummary {
    pub fn pass(&self) -> bool {
        self.passed == self.count
    }

    pub fn failures(&self) -> impl Iterator<Item = &ItemResult> {
        self.items.iter().filter(|i| !i.pass)
    }
}

struct Checker {
    pass: bool,
    notes: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            pass: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(what);
        } else {
            self.pass = false;
            self.notes.push(format!("FAILED: {what}"));
        }
    }
}

/// Exact solves in these checks stay below this order.
pub const EXACT_LIMIT: usize = 10;

fn check_tree(g: &Graph, solver: &Solver<'_>, c: &mut Checker) {
    let out = match color_tree(g) {
        Ok(out) => out,
        Err(e) => return c.check(false, format!("color_tree: {e}")),
    };
    let verified = is_strong_odd(g, &out.coloring).map(|r| r.holds()).unwrap_or(false);
    c.check(verified, "tree coloring is strong odd");
    let used = out.coloring.distinct();
    let odd = is_odd_tree(g);
    let expected = match g.order() {
        1 => 1,
        _ if odd => 2,
        _ => 3,
    };
    c.check(used == expected, format!("{used} colors, odd tree: {odd}"));
    c.check(out.steps <= 3 * g.order() as u64, format!("{} steps", out.steps));
    if g.order() <= EXACT_LIMIT {
        let r = solver.solve(g, Param::StrongOdd);
        c.check(r.optimal && r.value == used, format!("exact value {}", r.value));
    }
}

fn is_bare_c5(g: &Graph) -> bool {
    g.order() == 5 && g.size() == 5 && g.max_degree() == 2
}

fn check_unicyclic(g: &Graph, solver: &Solver<'_>, c: &mut Checker) {
    let out = match color_unicyclic(g) {
        Ok(out) => out,
        Err(e) => return c.check(false, format!("color_unicyclic: {e}")),
    };
    let verified = is_strong_odd(g, &out.coloring).map(|r| r.holds()).unwrap_or(false);
    c.check(verified, "unicyclic coloring is strong odd");
    let cap = if is_bare_c5(g) { 5 } else { 4 };
    let used = out.coloring.distinct();
    c.check(used <= cap, format!("{used} colors, cap {cap}"));
    c.check(out.steps <= 3 * g.order() as u64, format!("{} steps", out.steps));
    if g.order() <= EXACT_LIMIT {
        let r = solver.solve(g, Param::StrongOdd);
        c.check(r.optimal && r.value <= cap, format!("exact value {}", r.value));
    }
}

fn check_general(g: &Graph, solver: &Solver<'_>, c: &mut Checker) {
    let values: Vec<_> = Param::ALL.iter().map(|&p| (p, solver.solve(g, p))).collect();
    for (p, r) in &values {
        c.check(r.optimal, format!("{} = {} exact", p.name(), r.value));
        c.check(p.verifies(g, &r.witness), format!("{} witness verifies", p.name()));
    }
    let v: Vec<usize> = values.iter().map(|(_, r)| r.value).collect();
    let delta = g.max_degree();
    let cap = if g.order() == 0 { 0 } else { delta * delta + 1 };
    let chain = v.windows(2).all(|w| w[0] <= w[1]) && v[3] <= cap;
    c.check(chain, format!("chain {v:?} with cap {cap}"));
    if g.order() <= MAX_ORDER.min(8) {
        for (p, r) in &values {
            match brute_force_param(g, *p) {
                Ok(b) => c.check(b == r.value, format!("oracle {} = {b}", p.name())),
                Err(e) => c.check(false, format!("oracle: {e}")),
            }
        }
    }
}

/// Pipeline facts for one embedded map: the union coloring verifies, every
/// class satisfies the face-set property and the count respects the bound.
fn check_plane(m: &PlaneMultigraph, solver: &Solver<'_>, c: &mut Checker) {
    let g = m.underlying_graph();
    let phi = solver.solve(&g, Param::Chromatic);
    c.check(phi.optimal, format!("chi = {}", phi.value));
    let phi = phi.witness;
    match decompose_claim1(m, &phi) {
        Ok(classes) => {
            let ok = classes.iter().all(|class| check_claim1(m, &phi, class).is_ok());
            c.check(ok, format!("{} color classes keep their neighbourhood faces", classes.len()));
        }
        Err(e) => c.check(false, format!("decomposition: {e}")),
    }
    match strong_odd_via_planar(m, &phi, solver) {
        Ok(out) => {
            let verified = is_strong_odd(&g, &out.coloring).map(|r| r.holds()).unwrap_or(false);
            c.check(verified, "union coloring is strong odd");
            let k = phi.distinct();
            let worst = out.classes.iter().map(|cl| cl.colors).max().unwrap_or(0);
            let used = out.coloring.distinct();
            c.check(used <= k * worst, format!("{used} colors <= {k} * {worst}"));
        }
        Err(e) => c.check(false, format!("pipeline: {e}")),
    }
}

pub fn check_instance(family: Family, inst: &Instance, solver: &Solver<'_>) -> (bool, Vec<String>) {
    let mut c = Checker::new();
    match (family, inst) {
        (Family::Tree, Instance::Graph(g)) => check_tree(g, solver, &mut c),
        (Family::Unicyclic, Instance::Graph(g)) => check_unicyclic(g, solver, &mut c),
        (Family::General, Instance::Graph(g)) => check_general(g, solver, &mut c),
        (Family::PlanarEmbedded, Instance::Map(m)) => check_plane(m, solver, &mut c),
        _ => c.check(false, "instance does not match its family"),
    }
    (c.pass, c.notes)
}

/// Generates `count` items, writes them to `out` when given and runs the
/// family's checks on each.
pub fn run_corpus(
    family: Family,
    seed: u64,
    count: u64,
    size: usize,
    out: Option<&Path>,
    budget: Budget,
) -> Result<CorpusSummary, IoError> {
    let items: Vec<(u64, Instance)> = (0..count).map(|i| (i, instance(family, seed, i, size))).collect();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|source| IoError::Write {
            path: dir.display().to_string(),
            source,
        })?;
        for (i, inst) in &items {
            io::write_text(&dir.join(format!("{}_{i:04}.json", family.name())), &inst.to_json())?;
        }
    }
    let results: Vec<ItemResult> = std::thread::scope(|scope| {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(items.len().max(1));
        let chunk = items.len().div_ceil(workers.max(1)).max(1);
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let clock = crate::clock::WallClock::start();
                    let solver = Solver::with_clock(budget, &clock);
                    part.iter()
                        .map(|(i, inst)| {
                            let g = inst.graph();
                            let (pass, notes) = check_instance(family, inst, &solver);
                            ItemResult {
                                index: *i,
                                n: g.order(),
                                m: g.size(),
                                pass,
                                notes,
                            }
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("corpus worker panicked")).collect()
    });
    let passed = results.iter().filter(|r| r.pass).count() as u64;
    Ok(CorpusSummary {
        family,
        seed,
        count,
        size,
        passed,
        items: results,
    })
}
