use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use strong_odd::clock::WallClock;
use strong_odd::corpus::{run_corpus, Family};
use strong_odd::gallery::{cmd_gallery, row_names};
use strong_odd::generate::{gnp, item_rng, random_plane_map, random_tree, random_unicyclic};
use strong_odd::io;
use strong_odd_core::coloring::{verify_all, Report};
use strong_odd_core::constructive::{
    c5_box_c5_table, color_cycle, color_direct_complete, color_tree, color_unicyclic, compose_lexicographic,
    compose_product_coloring, nordhaus_gaddum, Constructed, NordhausGaddumKind,
};
use strong_odd_core::gallery::gallery;
use strong_odd_core::graph::{join, make_complete, make_complete_bipartite, make_cycle, make_path, make_star};
use strong_odd_core::plane::{
    augment_claim2, check_claim1, claim1_targets, decompose_claim1, strong_odd_via_planar, PlaneMultigraph,
};
use strong_odd_core::{product, Budget, Coloring, Decision, Graph, Param, ProductKind, Solver};

#[derive(Parser)]
#[command(name = "strong-odd", version, about = "Strong odd colorings of graphs and plane maps")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph or an embedded map.
    Gen(GenArgs),
    /// Check a coloring against all four coloring notions.
    Verify(VerifyArgs),
    /// Exact value of a parameter, or a k-colorability decision.
    Solve(SolveArgs),
    /// Run a polynomial-time construction.
    Color(ColorArgs),
    /// Build a graph product.
    Product(ProductArgs),
    /// Plane-map operations.
    Plane(PlaneArgs),
    /// Run the regression matrix over named graphs.
    Gallery(GalleryArgs),
    /// Generate a seeded random corpus and check it.
    Corpus(CorpusArgs),
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Node limit per solve.
    #[arg(long, default_value_t = 100_000_000)]
    max_nodes: u64,
    /// Time limit per solve in seconds.
    #[arg(long, default_value_t = 60.0)]
    max_time: f64,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        Budget {
            max_nodes: self.max_nodes,
            max_time: Some(Duration::from_secs_f64(self.max_time)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Tree,
    Unicyclic,
    Gnp,
    Planar,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Gallery,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Order (leaves for a star, first side for a complete bipartite graph).
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Second side of a complete bipartite graph.
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability for gnp.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Edge drop probability for planar maps.
    #[arg(long, default_value_t = 0.0)]
    drop: f64,
    /// Gallery entry name.
    #[arg(long)]
    name: Option<String>,
    /// Emit DOT instead of JSON (graphs only).
    #[arg(long)]
    dot: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    /// Predicates that must hold for exit code 0.
    #[arg(long, value_parser = parse_param, default_value = "so")]
    require: Vec<Param>,
}

fn parse_param(s: &str) -> Result<Param, String> {
    s.parse().map_err(|_| format!("unknown parameter {s:?}, expected chi, odd, so or square"))
}

fn parse_kind(s: &str) -> Result<ProductKind, String> {
    s.parse()
        .map_err(|_| format!("unknown product {s:?}, expected cartesian, direct, strong or lexicographic"))
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = parse_param, default_value = "so")]
    param: Param,
    /// Decide colorability with at most k colors instead of minimizing.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Tree,
    Cycle,
    Unicyclic,
    Product,
    DirectComplete,
    C5box,
    Ng,
}

#[derive(Args)]
struct ColorArgs {
    #[arg(long, value_enum)]
    method: Method,
    /// Input graph (tree, unicyclic).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Cycle length.
    #[arg(long)]
    n: Option<usize>,
    /// Factor files for the product method.
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long)]
    h: Option<PathBuf>,
    #[arg(long, value_parser = parse_kind, default_value = "cartesian")]
    kind: ProductKind,
    /// Complete factor sizes.
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Nordhaus-Gaddum instance: k and which graph.
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value_t = NgWhich::H1)]
    which: NgWhich,
    /// Color the complement instead.
    #[arg(long)]
    complement: bool,
    /// Also write the plain coloring JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NgWhich {
    H1,
    H2,
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    h: PathBuf,
    #[arg(long, value_parser = parse_kind)]
    kind: ProductKind,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlaneArgs {
    #[command(subcommand)]
    op: PlaneOp,
}

#[derive(Subcommand)]
enum PlaneOp {
    /// Faces, boundary walks and Euler's formula.
    Trace {
        #[arg(long)]
        map: PathBuf,
    },
    /// Replace a vertex by a face through its neighbours.
    Annihilate {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a properly colored map into one plane multigraph per class.
    Claim1 {
        #[arg(long)]
        map: PathBuf,
        /// Proper coloring; an optimal one is computed when omitted.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
    /// Add edges until 2-connected, keeping every face vertex set.
    Claim2 {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strong odd coloring through the color-class decomposition.
    Pipeline {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
struct GalleryArgs {
    /// Give the 12-color certifications a 30 minute budget.
    #[arg(long)]
    extended: bool,
    /// Run only these rows.
    #[arg(long)]
    only: Vec<String>,
    /// List row names and exit.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, value_parser = |s: &str| s.parse::<Family>())]
    family: Family,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: u64,
    /// Largest order.
    #[arg(long, default_value_t = 10)]
    size: usize,
    /// Directory for the generated instances.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// A command's result: a JSON document, its table rendering and whether
/// every check it ran passed.
struct Outcome {
    json: Value,
    table: String,
    pass: bool,
}

fn outcome(json: Value, table: String, pass: bool) -> Outcome {
    Outcome { json, table, pass }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize")),
                Format::Table => print!("{}", out.table),
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Gen(a) => cmd_gen(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Color(a) => cmd_color(a),
        Command::Product(a) => cmd_product(a),
        Command::Plane(a) => cmd_plane(a.op),
        Command::Gallery(a) => {
            if a.list {
                let names = row_names();
                let table = names.join("\n") + "\n";
                return Ok(outcome(json!(names), table, true));
            }
            let report = cmd_gallery(a.budget.budget(), a.extended, &a.only);
            if !a.only.is_empty() && report.rows.len() != a.only.len() {
                bail!("unknown gallery row in {:?}; see --list", a.only);
            }
            Ok(outcome(serde_json::to_value(&report)?, report.table(), report.pass))
        }
        Command::Corpus(a) => {
            let s = run_corpus(a.family, a.seed, a.count, a.size, a.out.as_deref(), a.budget.budget())?;
            let mut table = format!(
                "{} corpus, seed {}, {} items, n <= {}: {}/{} pass\n",
                s.family, s.seed, s.count, s.size, s.passed, s.count
            );
            for f in s.failures() {
                table += &format!("item {} (n = {}, m = {}): {}\n", f.index, f.n, f.m, f.notes.join("; "));
            }
            let pass = s.pass();
            Ok(outcome(serde_json::to_value(&s)?, table, pass))
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        io::write_text(path, text)?;
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<Outcome> {
    let mut rng = item_rng(a.seed, 0);
    let graph = match a.kind {
        GenKind::Planar => {
            if a.n < 3 {
                bail!("planar maps need n >= 3");
            }
            let m = random_plane_map(a.n, a.drop, &mut rng);
            let text = io::map_to_json(&m);
            emit(&text, a.out.as_deref())?;
            let table = format!("plane map: n = {}, m = {}, faces = {}\n", m.order(), m.size(), m.trace_faces().len());
            return Ok(outcome(serde_json::from_str(&text)?, table, true));
        }
        GenKind::Tree => random_tree(a.n, &mut rng),
        GenKind::Unicyclic => {
            if a.n < 3 {
                bail!("unicyclic graphs need n >= 3");
            }
            random_unicyclic(a.n, &mut rng)
        }
        GenKind::Gnp => gnp(a.n, a.p.clamp(0.0, 1.0), &mut rng),
        GenKind::Path => make_path(a.n)?,
        GenKind::Cycle => make_cycle(a.n)?,
        GenKind::Complete => make_complete(a.n)?,
        GenKind::CompleteBipartite => make_complete_bipartite(a.n, a.m)?,
        GenKind::Star => make_star(a.n)?,
        GenKind::Gallery => {
            let name = a.name.as_deref().context("--name is required for gallery graphs")?;
            gallery(name)?.graph
        }
    };
    let text = if a.dot { io::export_dot(&graph, None) } else { io::graph_to_json(&graph) };
    emit(&text, a.out.as_deref())?;
    let json = if a.dot { json!(text) } else { serde_json::from_str(&text)? };
    let table = if a.dot {
        text
    } else {
        format!("graph: n = {}, m = {}\n", graph.order(), graph.size())
    };
    Ok(outcome(json, table, true))
}

fn report_json(r: &Report) -> Value {
    json!({
        "holds": r.holds(),
        "violations": r.violations.iter().map(|v| json!({
            "kind": format!("{:?}", v.kind),
            "vertex": v.vertex,
            "color": v.color,
            "count": v.count,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome> {
    let g = io::load_graph(&a.graph)?;
    let phi = io::load_coloring(&a.coloring)?;
    let v = verify_all(&g, &phi)?;
    let rows = [
        (Param::Chromatic, "proper", &v.proper),
        (Param::Odd, "odd", &v.odd),
        (Param::StrongOdd, "strong_odd", &v.strong_odd),
        (Param::Square, "square", &v.square),
    ];
    let mut json = serde_json::Map::new();
    let mut table = String::new();
    for (_, name, r) in &rows {
        json.insert(name.to_string(), report_json(r));
        table += &format!("{name:<11} {}", if r.holds() { "yes" } else { "no" });
        if let Some(first) = r.violations.first() {
            table += &format!("  (first: {:?} at vertex {}, color {})", first.kind, first.vertex, first.color);
        }
        table.push('\n');
    }
    json.insert("colors".into(), json!(phi.distinct()));
    let pass = a.require.iter().all(|p| rows.iter().any(|(q, _, r)| q == p && r.holds()));
    Ok(outcome(Value::Object(json), table, pass))
}

fn cmd_solve(a: SolveArgs) -> Result<Outcome> {
    let g = io::load_graph(&a.graph)?;
    let clock = WallClock::start();
    let solver = Solver::with_clock(a.budget.budget(), &clock);
    let t = Instant::now();
    if let Some(k) = a.k {
        let (decision, nodes) = solver.decide(&a.param.problem(&g), k)?;
        let ms = t.elapsed().as_millis();
        let (answer, witness) = match &decision {
            Decision::Yes(w) => ("yes", Some(w.colors().to_vec())),
            Decision::No => ("no", None),
            Decision::Unknown => ("unknown", None),
        };
        let json = json!({"param": a.param.name(), "k": k, "decision": answer, "witness": witness, "nodes": nodes, "ms": ms});
        let table = format!("{} <= {k}: {answer} ({nodes} nodes, {ms} ms)\n", a.param.name());
        return Ok(outcome(json, table, answer != "unknown"));
    }
    let r = solver.solve(&g, a.param);
    let ms = t.elapsed().as_millis();
    let json = json!({
        "param": a.param.name(),
        "value": r.value,
        "optimal": r.optimal,
        "lower_bound": r.lower_bound,
        "witness": r.witness.colors(),
        "nodes": r.nodes_explored,
        "ms": ms,
    });
    let table = if r.optimal {
        format!("{} = {} ({} nodes, {ms} ms)\n", a.param.name(), r.value, r.nodes_explored)
    } else {
        format!(
            "{} in [{}, {}], budget exhausted ({} nodes, {ms} ms)\n",
            a.param.name(),
            r.lower_bound,
            r.value,
            r.nodes_explored
        )
    };
    Ok(outcome(json, table, r.optimal))
}

fn required<T: Copy>(x: Option<T>, flag: &str) -> Result<T> {
    x.with_context(|| format!("--{flag} is required for this method"))
}

fn load_required(path: &Option<PathBuf>, flag: &str) -> Result<Graph> {
    let path = path.as_ref().with_context(|| format!("--{flag} is required for this method"))?;
    Ok(io::load_graph(path)?)
}

fn cmd_color(a: ColorArgs) -> Result<Outcome> {
    let solver_clock = WallClock::start();
    let solver = Solver::with_clock(a.budget.budget(), &solver_clock);
    let exact = |g: &Graph| -> Result<Coloring> {
        let r = solver.solve(g, Param::StrongOdd);
        if !r.optimal {
            bail!("budget exhausted while coloring a factor");
        }
        Ok(r.witness)
    };
    let (graph, built): (Graph, Constructed) = match a.method {
        Method::Tree => {
            let g = load_required(&a.graph, "graph")?;
            let c = color_tree(&g)?;
            (g, c)
        }
        Method::Unicyclic => {
            let g = load_required(&a.graph, "graph")?;
            let c = color_unicyclic(&g)?;
            (g, c)
        }
        Method::Cycle => {
            let n = required(a.n, "n")?;
            (make_cycle(n)?, color_cycle(n)?)
        }
        Method::DirectComplete => {
            let (p, q) = (required(a.p, "p")?, required(a.q, "q")?);
            let g = product(&make_complete(p)?, &make_complete(q)?, ProductKind::Direct)?;
            (g, color_direct_complete(p, q)?)
        }
        Method::Product => {
            let g = load_required(&a.g, "g")?;
            let h = load_required(&a.h, "h")?;
            let phi_g = exact(&g)?;
            let built = if a.kind == ProductKind::Lexicographic {
                let apex = join(&Graph::empty(1), &h);
                compose_lexicographic(&g, &phi_g, &h, &exact(&apex)?)?
            } else {
                compose_product_coloring(&g, &phi_g, &h, &exact(&h)?, a.kind)?
            };
            (product(&g, &h, a.kind)?, built)
        }
        Method::C5box => {
            let c5 = make_cycle(5)?;
            let g = product(&c5, &c5, ProductKind::Cartesian)?;
            let built = Constructed {
                coloring: c5_box_c5_table(),
                provenance: vec!["fixed 5 x 5 table".to_string()],
                steps: 25,
            };
            (g, built)
        }
        Method::Ng => {
            let kind = match a.which {
                NgWhich::H1 => NordhausGaddumKind::H1,
                NgWhich::H2 => NordhausGaddumKind::H2,
            };
            let ng = nordhaus_gaddum(a.k, kind)?;
            let (g, coloring, side) = if a.complement {
                (ng.complement, ng.complement_coloring, "complement")
            } else {
                (ng.graph, ng.coloring, "graph")
            };
            let built = Constructed {
                coloring,
                provenance: vec![format!("{kind:?} {side} for k = {}", a.k)],
                steps: g.order() as u64,
            };
            (g, built)
        }
    };
    let verified = strong_odd_core::coloring::is_strong_odd(&graph, &built.coloring)?.holds();
    emit(&io::coloring_to_json(&built.coloring), a.out.as_deref())?;
    let json = json!({
        "colors": built.coloring.colors(),
        "distinct": built.coloring.distinct(),
        "verified": verified,
        "steps": built.steps,
        "provenance": built.provenance,
        "graph": io::GraphJson::from_graph(&graph),
    });
    let mut table = format!(
        "{} colors on n = {}, strong odd: {}, {} steps\n",
        built.coloring.distinct(),
        graph.order(),
        if verified { "yes" } else { "no" },
        built.steps
    );
    for line in &built.provenance {
        table += &format!("  {line}\n");
    }
    Ok(outcome(json, table, verified))
}

fn cmd_product(a: ProductArgs) -> Result<Outcome> {
    let g = io::load_graph(&a.g)?;
    let h = io::load_graph(&a.h)?;
    let p = product(&g, &h, a.kind)?;
    let text = io::graph_to_json(&p);
    emit(&text, a.out.as_deref())?;
    let table = format!("{} product: n = {}, m = {}\n", a.kind.name(), p.order(), p.size());
    Ok(outcome(serde_json::from_str(&text)?, table, true))
}

#[derive(Serialize)]
struct FaceJson {
    id: usize,
    darts: Vec<usize>,
    walk: Vec<usize>,
    vertices: Vec<usize>,
}

fn faces_json(m: &PlaneMultigraph) -> Vec<FaceJson> {
    let faces = m.trace_faces();
    faces
        .faces
        .iter()
        .zip(&faces.boundary_vertices)
        .enumerate()
        .map(|(id, (darts, vertices))| FaceJson {
            id,
            darts: darts.clone(),
            walk: m.walk(darts),
            vertices: vertices.clone(),
        })
        .collect()
}

fn coloring_or_optimal(m: &PlaneMultigraph, path: &Option<PathBuf>, solver: &Solver<'_>) -> Result<Coloring> {
    match path {
        Some(p) => Ok(io::load_coloring(p)?),
        None => {
            let r = solver.solve(&m.underlying_graph(), Param::Chromatic);
            if !r.optimal {
                bail!("budget exhausted while computing a proper coloring");
            }
            Ok(r.witness)
        }
    }
}

fn cmd_plane(op: PlaneOp) -> Result<Outcome> {
    match op {
        PlaneOp::Trace { map } => {
            let m = io::load_map(&map)?;
            let faces = faces_json(&m);
            let euler = m.satisfies_euler();
            let mut table = format!(
                "n = {}, m = {}, f = {}, connected: {}, Euler: {}\n",
                m.order(),
                m.size(),
                faces.len(),
                m.is_connected(),
                euler
            );
            for f in &faces {
                table += &format!("face {}: walk {:?}, V(f) = {:?}\n", f.id, f.walk, f.vertices);
            }
            let json = json!({"n": m.order(), "m": m.size(), "faces": faces, "connected": m.is_connected(), "euler": euler});
            Ok(outcome(json, table, euler || !m.is_connected()))
        }
        PlaneOp::Annihilate { map, vertex, out } => {
            let m = io::load_map(&map)?;
            let a = m.annihilate_traced(vertex)?;
            let check = strong_odd_core::plane::check_annihilation(&m, vertex, &a);
            let text = io::map_to_json(&a.map);
            emit(&text, out.as_deref())?;
            let table = format!(
                "annihilated {vertex}: neighbours {:?}, new edges {:?}, faces {} -> {}, check: {}\n",
                a.neighbors,
                a.new_edges,
                m.trace_faces().len(),
                a.map.trace_faces().len(),
                check.as_ref().map_or_else(|e| e.clone(), |_| "ok".to_string())
            );
            let json = json!({
                "map": serde_json::from_str::<Value>(&text)?,
                "neighbors": a.neighbors,
                "new_edges": [a.new_edges.start, a.new_edges.end],
                "check": check.as_ref().err(),
            });
            Ok(outcome(json, table, check.is_ok()))
        }
        PlaneOp::Claim1 { map, coloring } => {
            let m = io::load_map(&map)?;
            let solver = Solver::new(Budget::default());
            let phi = coloring_or_optimal(&m, &coloring, &solver)?;
            let classes = decompose_claim1(&m, &phi)?;
            let mut pass = true;
            let mut table = String::new();
            let mut rows = Vec::new();
            for class in &classes {
                let check = check_claim1(&m, &phi, class);
                pass &= check.is_ok();
                let targets = claim1_targets(&m, class);
                table += &format!(
                    "class {}: {} vertices, {} edges, {} faces, {} target sets, check: {}\n",
                    class.color,
                    class.order(),
                    class.map.size(),
                    class.map.trace_faces().len(),
                    targets.len(),
                    check.as_ref().map_or_else(|e| e.to_string(), |_| "ok".to_string())
                );
                rows.push(json!({
                    "color": class.color,
                    "vertices": class.original,
                    "map": serde_json::to_value(io::MapJson::from_map(&class.map))?,
                    "targets": targets,
                    "check": check.err().map(|e| e.to_string()),
                }));
            }
            Ok(outcome(json!({"classes": rows}), table, pass))
        }
        PlaneOp::Claim2 { map, out } => {
            let m = io::load_map(&map)?;
            let hat = augment_claim2(&m)?;
            let text = io::map_to_json(&hat);
            emit(&text, out.as_deref())?;
            let added: Vec<[usize; 2]> = hat.edges()[m.size()..].to_vec();
            let table = format!("added {} edges {:?}; 2-connected: {}\n", added.len(), added, hat.is_biconnected());
            let json = json!({"map": serde_json::from_str::<Value>(&text)?, "added": added, "biconnected": hat.is_biconnected()});
            Ok(outcome(json, table, hat.is_biconnected()))
        }
        PlaneOp::Pipeline { map, coloring, budget } => {
            let m = io::load_map(&map)?;
            let clock = WallClock::start();
            let solver = Solver::with_clock(budget.budget(), &clock);
            let phi = coloring_or_optimal(&m, &coloring, &solver)?;
            let out = strong_odd_via_planar(&m, &phi, &solver)?;
            let k = phi.distinct();
            let worst = out.classes.iter().map(|c| c.colors).max().unwrap_or(0);
            let mut table = format!(
                "{} colors from a proper {k}-coloring (bound {k} * {worst} = {})\n",
                out.coloring.distinct(),
                k * worst
            );
            let mut classes = Vec::new();
            for c in &out.classes {
                table += &format!(
                    "class {}: {} vertices, {} targets, {} -> {} edges, {} colors\n",
                    c.color,
                    c.vertices.len(),
                    c.targets,
                    c.edges,
                    c.augmented_edges,
                    c.colors
                );
                classes.push(json!({
                    "color": c.color, "vertices": c.vertices, "targets": c.targets, "edges": c.edges,
                    "augmented_edges": c.augmented_edges, "colors": c.colors, "nodes": c.nodes_explored,
                }));
            }
            let json = json!({"colors": out.coloring.colors(), "distinct": out.coloring.distinct(), "classes": classes});
            Ok(outcome(json, table, true))
        }
    }
}
