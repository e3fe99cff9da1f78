//! Command-line front end for the `netclass` solvers.
//!
//! Exit codes: 0 success, 1 no solution, 2 input error, 3 verification mismatch.

pub mod format;

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use netclass::decimal::{to_common_scale, Decimal};
use netclass::flow::{upward_critical, upward_critical_undirected, CriticalMode, FlowNetwork};
use netclass::geometry::{
    balanced_arrangement, polygon_reconstruct, triangle_from_median_closed, triangle_from_median_search,
    AxisStatus, BalancedInstance, BalancedOutcome, Point, PolygonInstance, TriangleInstance,
};
use netclass::geometry::triangle::DEFAULT_EPS;
use netclass::matching_classify::{classify_unweighted, classify_weighted};
use netclass::mst_classify::{classify_mst_edges, classify_spanning_tree_edges};
use netclass::oracle::{
    compare, flow_increment_oracle, indexed, membership, oracle_matching_classification, oracle_mst_classification,
};
use netclass::{BipartiteGraph, Category, Multigraph};
use serde_json::{json, Value};

use format::{BipartiteFile, EdgeRecord, FlowFile, MultigraphFile, PolygonFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO_SOLUTION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "netclass", version, about = "Edge and vertex classification for matchings, spanning trees and flows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify bipartite edges and vertices against all maximum matchings.
    ClassifyMatching {
        file: PathBuf,
        /// Use edge costs and classify against minimum-cost maximum matchings.
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        json: bool,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Classify multigraph edges against all minimum spanning trees.
    ClassifyMst {
        file: PathBuf,
        /// Ignore costs and classify against all spanning trees.
        #[arg(long)]
        no_costs: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        verify: bool,
    },
    /// List arcs whose unit capacity increase raises the maximum flow.
    CriticalEdges {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Residual)]
        mode: Mode,
        #[arg(long)]
        undirected: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Place points so every triangle's area equals its weight sum.
    BalancedPoints {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        weights: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Recover polygon vertices from points dividing its edges.
    ReconstructPolygon {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build triangle ABC from |AC|, |AB| and the median from A.
    TriangleMedian {
        #[arg(long, allow_hyphen_values = true)]
        lb: f64,
        #[arg(long, allow_hyphen_values = true)]
        lc: f64,
        #[arg(long, allow_hyphen_values = true)]
        lm: f64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Base length tolerance of the search.
        #[arg(long, default_value_t = DEFAULT_EPS)]
        leps: f64,
        /// Angle tolerance of the search.
        #[arg(long, default_value_t = DEFAULT_EPS)]
        ueps: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Paper,
    Residual,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Search,
}

/// Why a command stopped early.
enum Failure {
    Input(String),
    NoSolution,
    /// No solution, already stated in the JSON output.
    NoSolutionReported,
    Mismatch(String),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Output sink pair handed to each command.
struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return EXIT_INPUT;
        }
    };
    let mut io = Io { out, err };
    let result = dispatch(cli.command, &mut io);
    let code = match result {
        Ok(()) => EXIT_OK,
        Err(Failure::NoSolution) => {
            let _ = writeln!(io.out, "NO SOLUTION");
            EXIT_NO_SOLUTION
        }
        Err(Failure::NoSolutionReported) => EXIT_NO_SOLUTION,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Mismatch(report)) => {
            let _ = write!(io.err, "verification failed: {report}");
            EXIT_MISMATCH
        }
    };
    let _ = io.out.flush();
    code
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::ClassifyMatching { file, weighted, json, verify } => classify_matching(&file, weighted, json, verify, io),
        Command::ClassifyMst { file, no_costs, json, verify } => classify_mst(&file, no_costs, json, verify, io),
        Command::CriticalEdges { file, mode, undirected, json, verify } => {
            let mode = match mode {
                Mode::Paper => CriticalMode::Paper,
                Mode::Residual => CriticalMode::Residual,
            };
            critical_edges(&file, mode, undirected, json, verify, io)
        }
        Command::BalancedPoints { weights, json } => balanced_points(&weights, json, io),
        Command::ReconstructPolygon { file, json } => reconstruct_polygon(&file, json, io),
        Command::TriangleMedian { lb, lc, lm, method, leps, ueps, json } => {
            triangle_median(lb, lc, lm, method, leps, ueps, json, io)
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Integer costs at a shared decimal scale; missing costs count as zero.
fn scaled_costs(edges: &[EdgeRecord], use_costs: bool) -> std::result::Result<Vec<i64>, Failure> {
    if !use_costs {
        return Ok(vec![0; edges.len()]);
    }
    let costs: Vec<Decimal> = edges.iter().map(|e| e.cost.unwrap_or(Decimal::from_int(0))).collect();
    Ok(to_common_scale(&costs)?.0)
}

fn emit_json(io: &mut Io<'_>, value: &Value) -> Outcome {
    writeln!(io.out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn classify_matching(path: &Path, weighted: bool, json: bool, verify: bool, io: &mut Io<'_>) -> Outcome {
    let file = BipartiteFile::parse(&read(path)?, weighted)?;
    let costs = scaled_costs(&file.edges, weighted)?;
    let g = BipartiteGraph::from_edges(
        file.left_count,
        file.right_count,
        file.edges.iter().zip(costs).map(|(e, c)| (e.u, e.v, c)),
    )?;
    let c = if weighted { classify_weighted(&g)? } else { classify_unweighted(&g) };

    let vertex_names: Vec<String> = (1..=g.left_count())
        .map(|u| format!("L{u}"))
        .chain((1..=g.right_count()).map(|v| format!("R{v}")))
        .collect();
    if json {
        let edges: Vec<Value> = g
            .edges()
            .iter()
            .zip(&c.edges)
            .enumerate()
            .map(|(id, (e, cat))| json!({"id": id, "u": e.left, "v": e.right, "category": cat.as_str()}))
            .collect();
        let vertices: Vec<Value> = vertex_names
            .iter()
            .zip(&c.vertices)
            .map(|(name, cat)| json!({"vertex": name, "category": cat.as_str()}))
            .collect();
        emit_json(io, &json!({"edges": edges, "vertices": vertices}))?;
    } else {
        for (id, (e, cat)) in g.edges().iter().zip(&c.edges).enumerate() {
            writeln!(io.out, "edge\t{id}\t{}\t{}\t{cat}", e.left, e.right)?;
        }
        for (name, cat) in vertex_names.iter().zip(&c.vertices) {
            writeln!(io.out, "vertex\t{name}\t{cat}")?;
        }
    }

    if verify {
        let expected = oracle_matching_classification(&g, weighted)?;
        let report = compare(&expected.to_map(), &c.to_map())?;
        if !report.is_match() {
            return Err(Failure::Mismatch(report.to_string()));
        }
    }
    Ok(())
}

fn classify_mst(path: &Path, no_costs: bool, json: bool, verify: bool, io: &mut Io<'_>) -> Outcome {
    let file = MultigraphFile::parse(&read(path)?, !no_costs)?;
    let costs = scaled_costs(&file.edges, !no_costs)?;
    let g = Multigraph::from_edges(file.vertex_count, file.edges.iter().zip(costs).map(|(e, c)| (e.u, e.v, c)))?;
    let cats = if no_costs { classify_spanning_tree_edges(&g)? } else { classify_mst_edges(&g)? };

    if json {
        let edges: Vec<Value> = g
            .edges()
            .iter()
            .zip(&cats)
            .enumerate()
            .map(|(id, (e, cat))| json!({"id": id, "u": e.u, "v": e.v, "category": cat.as_str()}))
            .collect();
        emit_json(io, &json!({"edges": edges}))?;
    } else {
        for (id, (e, cat)) in g.edges().iter().zip(&cats).enumerate() {
            writeln!(io.out, "edge\t{id}\t{}\t{}\t{cat}", e.u, e.v)?;
        }
    }

    if verify {
        let reference = if no_costs { g.with_uniform_cost(1) } else { g.clone() };
        let expected: Vec<Category> = oracle_mst_classification(&reference)?;
        let report = compare(&indexed(&expected), &indexed(&cats))?;
        if !report.is_match() {
            return Err(Failure::Mismatch(report.to_string()));
        }
    }
    Ok(())
}

fn critical_edges(path: &Path, mode: CriticalMode, undirected: bool, json: bool, verify: bool, io: &mut Io<'_>) -> Outcome {
    let file = FlowFile::parse(&read(path)?)?;
    let net = FlowNetwork::new(file.vertex_count, file.arcs.iter().copied(), file.sources, file.sinks, !undirected)?;
    let result = if undirected { upward_critical_undirected(&net, mode)? } else { upward_critical(&net, mode)? };

    if json {
        let edges: Vec<Value> = result
            .edges
            .iter()
            .map(|&id| {
                let a = net.arcs()[id];
                json!({"id": id, "u": a.u, "v": a.v})
            })
            .collect();
        emit_json(io, &json!({"edges": edges, "value": result.flow.value}))?;
    } else {
        for &id in &result.edges {
            let a = net.arcs()[id];
            writeln!(io.out, "critical\t{id}\t{}\t{}", a.u, a.v)?;
        }
    }

    if verify {
        let expected = flow_increment_oracle(&net)?;
        let report = compare(&membership(net.arc_count(), &expected), &membership(net.arc_count(), &result.edges))?;
        if !report.is_match() {
            return Err(Failure::Mismatch(report.to_string()));
        }
    }
    Ok(())
}

/// Fixed-precision rendering; negative zero prints as zero.
fn coord(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn json_coord(x: f64) -> Value {
    json!(if x == 0.0 { 0.0 } else { x })
}

fn write_points(io: &mut Io<'_>, labels: &[String], points: &[Point]) -> Outcome {
    for (label, p) in labels.iter().zip(points) {
        writeln!(io.out, "vertex\t{label}\t{}\t{}", coord(p.x), coord(p.y))?;
    }
    Ok(())
}

fn json_points(labels: &[String], points: &[Point]) -> Vec<Value> {
    labels
        .iter()
        .zip(points)
        .map(|(label, p)| json!({"vertex": label, "x": json_coord(p.x), "y": json_coord(p.y)}))
        .collect()
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn balanced_points(weights: &[String], json: bool, io: &mut Io<'_>) -> Outcome {
    let weights = weights
        .iter()
        .map(|w| w.trim().parse::<Decimal>().map_err(|_| Failure::Input(format!("invalid weight '{w}'"))))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let inst = BalancedInstance::new(weights)?;
    match balanced_arrangement(&inst) {
        BalancedOutcome::Points(points) => {
            let labels = numbered(points.len());
            if json {
                emit_json(io, &json!({"status": "SOLVED", "vertices": json_points(&labels, &points)}))
            } else {
                write_points(io, &labels, &points)
            }
        }
        BalancedOutcome::NoSolution if json => {
            emit_json(io, &json!({"status": "NO SOLUTION", "vertices": []}))?;
            Err(Failure::NoSolutionReported)
        }
        BalancedOutcome::NoSolution => Err(Failure::NoSolution),
    }
}

fn reconstruct_polygon(path: &Path, json: bool, io: &mut Io<'_>) -> Outcome {
    let file = PolygonFile::parse(&read(path)?)?;
    let points = file.rows.iter().map(|&(x, y, _)| Point::new(x, y)).collect();
    let ratios = file.rows.iter().map(|&(_, _, t)| t).collect();
    let inst = PolygonInstance::new(points, ratios)?;
    let r = polygon_reconstruct(&inst);
    for w in &r.warnings {
        writeln!(io.err, "warning: {w}")?;
    }
    let solvable = r.x_status != AxisStatus::NoSolution && r.y_status != AxisStatus::NoSolution;
    let labels = numbered(inst.len());
    let vertices = r.vertices.unwrap_or_default();
    if json {
        let status = json!({"x": r.x_status.to_string(), "y": r.y_status.to_string()});
        emit_json(io, &json!({"status": status, "vertices": json_points(&labels, &vertices)}))?;
    } else {
        writeln!(io.out, "status\t{}\t{}", r.x_status, r.y_status)?;
        write_points(io, &labels, &vertices)?;
    }
    if solvable {
        Ok(())
    } else if json {
        Err(Failure::NoSolutionReported)
    } else {
        Err(Failure::NoSolution)
    }
}

#[allow(clippy::too_many_arguments)]
fn triangle_median(lb: f64, lc: f64, lm: f64, method: Method, leps: f64, ueps: f64, json: bool, io: &mut Io<'_>) -> Outcome {
    if !(leps > 0.0 && ueps > 0.0) {
        return Err(Failure::Input("--leps and --ueps must be positive".into()));
    }
    let inst = TriangleInstance::new(lb, lc, lm)?;
    let result = match method {
        Method::Closed => triangle_from_median_closed(&inst),
        Method::Search => triangle_from_median_search(&inst, leps, ueps),
    };
    let labels: Vec<String> = ["A", "B", "C"].iter().map(|s| s.to_string()).collect();
    match result {
        Ok(t) => {
            if t.degenerate {
                writeln!(io.err, "warning: degenerate triangle, A lies on line BC")?;
            }
            let points = [t.a, t.b, t.c];
            if json {
                let status = if t.degenerate { "DEGENERATE" } else { "SOLVED" };
                emit_json(io, &json!({"status": status, "vertices": json_points(&labels, &points)}))
            } else {
                write_points(io, &labels, &points)
            }
        }
        Err(netclass::Error::NoTriangle) if json => {
            emit_json(io, &json!({"status": "NO SOLUTION", "vertices": []}))?;
            Err(Failure::NoSolutionReported)
        }
        Err(netclass::Error::NoTriangle) => Err(Failure::NoSolution),
        Err(e) => Err(e.into()),
    }
}
