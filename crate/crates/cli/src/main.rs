//! Command-line front end: alphabet inspection, path counting, word
//! checks, hexagon geometry, the crossing oracle, the census, and the
//! closed-form bounds. Output goes to stdout as JSON (default) or CSV.
//!
//! Exit codes: 0 success, 1 domain errors (bad words, violated
//! hypotheses, budget overruns), 2 usage errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pants_core::graph::{count_cyclic_paths, DEFAULT_PATH_CAP};
use pants_core::group::edge_letters;
use pants_core::schottky::{build_domain, trace_geodesic};
use pants_core::{
    build_holonomy, pants_lower_bound, run_census, self_crossing_count, solve_hexagon,
    surface_lower_bound, word_to_group, CensusOptions, CensusQuery, CensusRecord, CyclicWord,
    EdgeGraph, FreeGroupElement, Hexagon, Holonomy, Mat2, OrientedEdge, PantsComplex,
    PantsMetric, SurfaceParams,
};

const SCHEMA: &str = "pants-census/1";
const L_MAX_VARIANT: &str =
    "hexagon edge maximum; the boundary-distance variant is at most twice this";

#[derive(Parser)]
#[command(
    name = "pants-census",
    version,
    about = "Censuses and lower bounds for closed geodesics on a hyperbolic pair of pants"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Cap on enumerated path length.
    #[arg(long, global = true, default_value_t = DEFAULT_PATH_CAP)]
    budget: usize,
    /// Relative tolerance when certificates are re-verified.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the oriented-edge alphabet.
    Alphabet {
        #[command(subcommand)]
        cmd: AlphabetCmd,
    },
    /// Count or list cyclic paths of the transition graph.
    Paths {
        #[command(subcommand)]
        cmd: PathsCmd,
    },
    /// Validate cyclic words and evaluate their crossing bound.
    Word {
        #[command(subcommand)]
        cmd: WordCmd,
    },
    /// Solve the hexagon decomposition of a pants metric.
    Geometry {
        #[command(subcommand)]
        cmd: GeometryCmd,
    },
    /// Geometric self-crossing counts from the fundamental domain.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Enumerate certified geodesic classes under length and crossing
    /// budgets.
    Census(CensusArgs),
    /// Closed-form lower bounds on census sizes.
    Bound {
        #[command(subcommand)]
        cmd: BoundCmd,
    },
}

#[derive(Subcommand)]
enum AlphabetCmd {
    /// Emit the full incidence table: all 18 oriented edges, their
    /// endpoints, successors, free-group images, and the hexagon relators.
    Dump,
}

#[derive(Subcommand)]
enum PathsCmd {
    /// Closed-form count of cyclic paths of the given length.
    Count {
        #[arg(long)]
        length: u64,
    },
    /// List cyclic paths of the given length with their words.
    Enumerate {
        #[arg(long)]
        length: usize,
        /// Drop proper powers of shorter paths.
        #[arg(long)]
        primitive: bool,
    },
}

#[derive(Args)]
struct WordArg {
    /// Edge labels (x1..x6, y1..y3, trailing '-' reverses), e.g.
    /// --word x1 x4- x1 y3 ...
    #[arg(long, num_args = 1.., required = true)]
    word: Vec<String>,
}

#[derive(Subcommand)]
enum WordCmd {
    /// Check the word axioms and report the canonical rotation.
    Validate(WordArg),
    /// Evaluate the combinatorial self-intersection bound i(w,w).
    Intersect(WordArg),
}

#[derive(Args)]
struct BoundaryArg {
    /// Boundary lengths L1 L2 L3.
    #[arg(long, num_args = 3, required = true, value_names = ["L1", "L2", "L3"])]
    boundary: Vec<f64>,
}

#[derive(Subcommand)]
enum GeometryCmd {
    /// Hexagon edge lengths and holonomy generators for the metric.
    Solve {
        #[command(flatten)]
        boundary: BoundaryArg,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Trace the geodesic of a word and count its self-crossings.
    Intersections {
        #[command(flatten)]
        boundary: BoundaryArg,
        #[command(flatten)]
        word: WordArg,
    },
}

#[derive(Args)]
struct CensusArgs {
    /// Length budget.
    #[arg(long = "L")]
    l: f64,
    /// Self-intersection budget.
    #[arg(long = "K")]
    k: u64,
    #[command(flatten)]
    boundary: BoundaryArg,
    /// Also run the geometric oracle on every record.
    #[arg(long)]
    with_oracle: bool,
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Closed-form census floor for one pair of pants.
    Pants {
        #[arg(long = "L")]
        l: f64,
        #[arg(long = "K")]
        k: u64,
        #[command(flatten)]
        boundary: BoundaryArg,
    },
    /// Packing bound for a general hyperbolic surface.
    Surface {
        /// Genus.
        #[arg(long = "g")]
        genus: u32,
        /// Number of boundary components.
        #[arg(long = "n")]
        boundary_count: u32,
        #[arg(long)]
        area: f64,
        /// Systole length.
        #[arg(long = "sys")]
        systole: f64,
        /// Pants-count constant c_X (no closed form; caller-supplied).
        #[arg(long = "cx")]
        c_x: f64,
        #[arg(long = "L")]
        l: f64,
        #[arg(long = "K")]
        k: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(v) => {
            emit(&v, format);
            ExitCode::SUCCESS
        }
        Err(message) => {
            emit(&json!({ "schema": SCHEMA, "error": message }), format);
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Value, String> {
    match cli.command {
        Command::Alphabet { cmd: AlphabetCmd::Dump } => Ok(alphabet_dump()),
        Command::Paths { cmd } => paths(cmd, cli.budget),
        Command::Word { cmd } => word(cmd),
        Command::Geometry { cmd: GeometryCmd::Solve { boundary } } => {
            geometry_solve(&boundary.lengths()?)
        }
        Command::Oracle { cmd: OracleCmd::Intersections { boundary, word } } => {
            oracle_intersections(&boundary.lengths()?, &word.parse()?)
        }
        Command::Census(args) => census(args, cli.budget, cli.tolerance),
        Command::Bound { cmd } => bound(cmd),
    }
}

impl BoundaryArg {
    fn lengths(&self) -> Result<[f64; 3], String> {
        <[f64; 3]>::try_from(self.boundary.as_slice())
            .map_err(|_| String::from("--boundary takes exactly three lengths"))
    }
}

impl WordArg {
    /// Labels may come as separate arguments or as quoted groups.
    fn parse(&self) -> Result<Vec<OrientedEdge>, String> {
        let mut letters = Vec::new();
        for chunk in &self.word {
            for label in chunk.split_whitespace() {
                letters.push(OrientedEdge::from_str(label).map_err(|e| e.to_string())?);
            }
        }
        Ok(letters)
    }
}

fn labels<'a, I: IntoIterator<Item = &'a OrientedEdge>>(edges: I) -> Vec<String> {
    edges.into_iter().map(|e| e.to_string()).collect()
}

fn group_labels(g: &FreeGroupElement) -> Vec<&'static str> {
    g.letters().iter().map(|l| l.label()).collect()
}

fn mat_json(m: Mat2) -> Value {
    json!([[m.a, m.b], [m.c, m.d]])
}

fn alphabet_dump() -> Value {
    let cx = PantsComplex::new();
    let edges: Vec<Value> = OrientedEdge::all()
        .map(|e| {
            let mut entry = json!({
                "label": e.to_string(),
                "kind": if e.is_boundary() { "boundary" } else { "seam" },
                "start": cx.start(e).label(),
                "end": cx.end(e).label(),
                "reverse": e.reverse().to_string(),
                "free_image": edge_letters(e).iter().map(|l| l.label()).collect::<Vec<_>>(),
            });
            if e.is_boundary() {
                entry["hexagon"] = json!(match cx.hexagon_of(e) {
                    Hexagon::Front => "front",
                    Hexagon::Back => "back",
                });
                entry["component"] = json!(cx.component_of(e));
                entry["boundary_successor"] = json!(cx.boundary_successor(e).to_string());
            } else {
                let (from, to) = cx.seam_joins(e);
                entry["joins"] = json!([from, to]);
            }
            entry
        })
        .collect();
    let relators: Vec<Vec<String>> =
        cx.hexagon_relators().iter().map(|r| labels(r.iter())).collect();
    json!({ "schema": SCHEMA, "edges": edges, "hexagon_relators": relators })
}

fn paths(cmd: PathsCmd, budget: usize) -> Result<Value, String> {
    match cmd {
        PathsCmd::Count { length } => {
            let h = count_cyclic_paths(length).to_string();
            let h_value = h.parse::<u64>().map(Value::from).unwrap_or(Value::from(h));
            Ok(json!({ "schema": SCHEMA, "n": length, "H": h_value }))
        }
        PathsCmd::Enumerate { length, primitive } => {
            if length == 0 {
                return Err(String::from("path length must be positive"));
            }
            let cx = PantsComplex::new();
            let graph = EdgeGraph::new(&cx).with_cap(budget);
            let paths = graph.enumerate_cyclic_paths(length, primitive).map_err(|e| e.to_string())?;
            let items: Vec<Value> = paths
                .iter()
                .map(|p| {
                    let word = graph.path_to_word(p, &cx);
                    json!({
                        "path": labels(p.vertices()),
                        "arcs": p.labels().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                        "primitive": p.is_primitive(),
                        "word": labels(word.letters()),
                        "word_length": word.len(),
                    })
                })
                .collect();
            Ok(json!({
                "schema": SCHEMA,
                "n": length,
                "primitive_only": primitive,
                "count": items.len(),
                "paths": items,
            }))
        }
    }
}

fn word(cmd: WordCmd) -> Result<Value, String> {
    let cx = PantsComplex::new();
    match cmd {
        WordCmd::Validate(arg) => {
            let word = CyclicWord::validate(&arg.parse()?, &cx).map_err(|e| e.to_string())?;
            Ok(json!({
                "schema": SCHEMA,
                "ok": true,
                "word": labels(word.letters()),
                "length": word.len(),
                "primitive": word.is_primitive(),
            }))
        }
        WordCmd::Intersect(arg) => {
            let word = CyclicWord::validate(&arg.parse()?, &cx).map_err(|e| e.to_string())?;
            let subwords: Vec<Value> = word
                .decompose(&cx)
                .subwords
                .iter()
                .map(|s| {
                    json!({
                        "letters": labels(&s.letters),
                        "component": s.component,
                        "seam": s.seam.map(|e| e.to_string()),
                    })
                })
                .collect();
            Ok(json!({
                "schema": SCHEMA,
                "word": labels(word.letters()),
                "length": word.len(),
                "i_w": word.self_intersection(&cx),
                "subwords": subwords,
            }))
        }
    }
}

fn metric_json(m: &PantsMetric) -> Value {
    json!({
        "boundary_lengths": m.boundary_lengths(),
        "boundary_edge_lengths": m.boundary_edge_lengths(),
        "seam_lengths": m.seam_lengths(),
        "l_max": m.l_max(),
        "l_min": m.l_min(),
    })
}

fn solve(boundary: &[f64; 3]) -> Result<(PantsMetric, Holonomy), String> {
    let metric = solve_hexagon(boundary[0], boundary[1], boundary[2]).map_err(|e| e.to_string())?;
    let holonomy = build_holonomy(&metric);
    Ok((metric, holonomy))
}

fn geometry_solve(boundary: &[f64; 3]) -> Result<Value, String> {
    let (metric, holonomy) = solve(boundary)?;
    let a = holonomy.gen_a();
    let b = holonomy.gen_b();
    Ok(json!({
        "schema": SCHEMA,
        "metric": metric_json(&metric),
        "generators": { "a": mat_json(a), "b": mat_json(b) },
        "peripheral_traces": [a.trace(), b.trace(), a.mul(b).trace()],
    }))
}

fn oracle_intersections(boundary: &[f64; 3], letters: &[OrientedEdge]) -> Result<Value, String> {
    let cx = PantsComplex::new();
    let word = CyclicWord::validate(letters, &cx).map_err(|e| e.to_string())?;
    let (_, holonomy) = solve(boundary)?;
    let g = word_to_group(&word);
    let i_w = word.self_intersection(&cx);
    let i_geo = self_crossing_count(&g, &holonomy).map_err(|e| e.to_string())?;
    let domain = build_domain(&holonomy).map_err(|e| e.to_string())?;
    let traced =
        trace_geodesic(&g.conjugacy_form(), &domain).map_err(|e| e.to_string())?;
    let pieces: Vec<Value> = traced
        .pieces()
        .iter()
        .map(|p| json!({ "start": [p.start.0, p.start.1], "end": [p.end.0, p.end.1], "length": p.length }))
        .collect();
    Ok(json!({
        "schema": SCHEMA,
        "word": labels(word.letters()),
        "i_w": i_w,
        "i_geo": i_geo,
        "pieces": pieces,
        "geodesic_length": traced.total_length(),
    }))
}

fn record_json(r: &CensusRecord) -> Value {
    json!({
        "path": labels(r.path.vertices()),
        "word": labels(r.word.letters()),
        "word_length": r.word_length,
        "word_intersection": r.word_intersection,
        "length_upper_bound": r.length_upper_bound,
        "exact_length": r.exact_length,
        "conjugacy_form": group_labels(&r.conjugacy_form),
        "oracle_intersections": r.oracle_intersections,
    })
}

fn census(args: CensusArgs, budget: usize, tolerance: f64) -> Result<Value, String> {
    let query = CensusQuery {
        l: args.l,
        k: args.k,
        boundary_lengths: args.boundary.lengths()?,
    };
    let opts = CensusOptions { with_oracle: args.with_oracle, path_cap: budget };
    let census = run_census(&query, &opts).map_err(|e| e.to_string())?;
    for r in &census.records {
        let certified = r.exact_length <= r.length_upper_bound * (1.0 + tolerance)
            && r.length_upper_bound <= query.l * (1.0 + tolerance)
            && r.word_intersection <= query.k;
        if !certified {
            return Err(format!(
                "record {} fails its certificate at tolerance {tolerance}",
                r.word
            ));
        }
    }
    Ok(json!({
        "schema": SCHEMA,
        "query": { "L": query.l, "K": query.k, "boundary_lengths": query.boundary_lengths },
        "metric": metric_json(&census.metric),
        "path_length_budget": census.path_length_budget,
        "lower_bound": census.lower_bound,
        "count": census.records.len(),
        "oriented_classes": true,
        "l_max_variant": L_MAX_VARIANT,
        "records": census.records.iter().map(record_json).collect::<Vec<_>>(),
    }))
}

fn bound(cmd: BoundCmd) -> Result<Value, String> {
    match cmd {
        BoundCmd::Pants { l, k, boundary } => {
            let (metric, _) = solve(&boundary.lengths()?)?;
            let value = pants_lower_bound(l, k, metric.l_max()).map_err(|e| e.to_string())?;
            Ok(json!({
                "schema": SCHEMA,
                "value": value,
                "L": l,
                "K": k,
                "l_max": metric.l_max(),
                "l_max_variant": L_MAX_VARIANT,
            }))
        }
        BoundCmd::Surface { genus, boundary_count, area, systole, c_x, l, k } => {
            let params = SurfaceParams::new(genus, boundary_count, area, systole, c_x)
                .map_err(|e| e.to_string())?;
            let bound = surface_lower_bound(&params, l, k).map_err(|e| e.to_string())?;
            Ok(json!({
                "schema": SCHEMA,
                "value": bound.value,
                "s_x": bound.s_x,
                "s_prime": bound.s_prime,
                "exponent": bound.exponent,
                "margin": bound.margin,
                "headline_hypothesis": bound.headline_hypothesis,
                "restated_hypothesis": bound.restated_hypothesis,
                "L": l,
                "K": k,
            }))
        }
    }
}

fn emit(v: &Value, format: Format) {
    match format {
        Format::Json => println!("{v}"),
        Format::Csv => print_csv(v),
    }
}

/// CSV rendering: when the object holds an array of records, print a
/// table over their keys; otherwise print flattened key,value rows.
fn print_csv(v: &Value) {
    let obj = v.as_object().expect("top-level output is an object");
    let table = obj.iter().find_map(|(_, val)| match val {
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_object) => Some(rows),
        _ => None,
    });
    match table {
        Some(rows) => {
            let mut columns: Vec<&str> = Vec::new();
            for row in rows {
                for key in row.as_object().unwrap().keys() {
                    if !columns.iter().any(|c| c == key) {
                        columns.push(key);
                    }
                }
            }
            println!("{}", columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
            for row in rows {
                let cells: Vec<String> = columns
                    .iter()
                    .map(|c| csv_field(&flat(row.get(*c).unwrap_or(&Value::Null))))
                    .collect();
                println!("{}", cells.join(","));
            }
        }
        None => {
            println!("key,value");
            let mut pairs = Vec::new();
            flatten("", v, &mut pairs);
            for (key, value) in pairs {
                println!("{},{}", csv_field(&key), csv_field(&value));
            }
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, val, out);
            }
        }
        other => out.push((prefix.to_string(), flat(other))),
    }
}

/// Single-cell rendering: arrays space-joined, nulls empty.
fn flat(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(flat).collect::<Vec<_>>().join(" "),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
