//! The `flowgraph` command line.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false verdict or a
//! graph that fails validation, 2 for unreadable input or bad usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::format::{parse_file, select, serialize, Graph};
use crate::invariants::{
    census, enumerate_cstar_cycles, enumerate_st_cycles, enumerate_tu_cycles, surface_type_equipped,
    surface_type_four_colour,
};
use crate::iso::{
    direct_equipped_map, direct_four_colour_map, equipped_iso_certificate, equipped_vertex_map,
    four_colour_iso_certificate, four_colour_vertex_map, restore_equipped, restore_four_colour, to_simple_equipped,
    to_simple_equipped_with_layout, to_simple_four_colour, OracleBudget, SimpleGraph,
};
use crate::model::{validate_equipped, validate_four_colour, OrientedCycle, VertexKind};
use crate::realization::{complex_euler, complex_orientable, equipped_euler_oracle, glue, random_admissible};

#[derive(Debug, Parser)]
#[command(
    name = "flowgraph",
    version,
    about = "Four-colour and equipped graphs of surface flows"
)]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value = "plain")]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphType {
    Fcg,
    Eqg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List structural and admissibility violations.
    Validate {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Euler characteristic, orientability and genus of the surface.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// tu-, st- and c*-cycles as dart lists.
    Cycles {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Decide whether two graphs are isomorphic.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        graph2: Option<String>,
        /// Decide with the exhaustive search instead of the reduction.
        #[arg(long)]
        oracle: bool,
        /// Print the vertex correspondence when isomorphic.
        #[arg(long)]
        emit_mapping: bool,
    },
    /// Print the simple graph of the gadget reduction as `u v` lines.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Rebuild a graph from a reduction's edge list.
    Restore {
        file: PathBuf,
        /// Kind of graph to rebuild; by default eqg when pendant vertices exist.
        #[arg(long = "as", value_enum)]
        as_type: Option<GraphType>,
    },
    /// Glue the region polygons and report the resulting complex.
    Realize {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Emit random admissible four-colour graphs.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

struct Line {
    key: &'static str,
    text: String,
    json: Value,
    /// Printed without the `key=` prefix in plain output.
    bare: bool,
}

fn kv(key: &'static str, value: impl ToString, json: Value) -> Line {
    Line {
        key,
        text: value.to_string(),
        json,
        bare: false,
    }
}

fn int(key: &'static str, v: i64) -> Line {
    kv(key, v, json!(v))
}

fn boolean(key: &'static str, v: bool) -> Line {
    kv(key, v, json!(v))
}

fn text(key: &'static str, v: impl Into<String>) -> Line {
    let v = v.into();
    Line {
        key,
        json: json!(v),
        text: v,
        bare: false,
    }
}

/// Verbatim text lines such as a serialized graph.
fn raw_lines(body: &str) -> Vec<Line> {
    body.lines()
        .map(|l| Line {
            key: "line",
            text: l.to_string(),
            json: json!(l),
            bare: true,
        })
        .collect()
}

enum Failure {
    /// Exit 1: the graph does not pass validation or is not in the image.
    Invalid(String),
    /// Exit 2.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAdmissible(_)
            | Error::NotWellFormed(_)
            | Error::NotInImage(_)
            | Error::InconsistentPair { .. } => Failure::Invalid(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Outcome {
    lines: Vec<Line>,
    verdict: bool,
}

fn ok(lines: Vec<Line>) -> Result<Outcome, Failure> {
    Ok(Outcome { lines, verdict: true })
}

fn load(path: &PathBuf, name: Option<&str>) -> Result<Graph, Failure> {
    let graphs = parse_file(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    select(&graphs, name)
        .cloned()
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = execute(&cli.command);
    match result {
        Ok(outcome) => {
            emit(out, cli.format, &outcome.lines);
            if outcome.verdict {
                0
            } else {
                1
            }
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, format: OutputFormat, lines: &[Line]) {
    for l in lines {
        let _ = match format {
            OutputFormat::Plain if l.bare => writeln!(out, "{}", l.text),
            OutputFormat::Plain => writeln!(out, "{}={}", l.key, l.text),
            OutputFormat::JsonLines => {
                let mut m = serde_json::Map::new();
                m.insert(l.key.to_string(), l.json.clone());
                writeln!(out, "{}", Value::Object(m))
            }
        };
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Validate { file, graph } => validate(&load(file, graph.as_deref())?),
        Command::Invariants { file, graph } => invariants(&load(file, graph.as_deref())?),
        Command::Cycles { file, graph } => cycles(&load(file, graph.as_deref())?),
        Command::Iso {
            file1,
            file2,
            graph,
            graph2,
            oracle,
            emit_mapping,
        } => {
            let g1 = load(file1, graph.as_deref())?;
            let g2 = load(file2, graph2.as_deref().or(graph.as_deref()))?;
            iso(&g1, &g2, *oracle, *emit_mapping)
        }
        Command::Reduce { file, graph } => reduce(&load(file, graph.as_deref())?),
        Command::Restore { file, as_type } => restore(file, *as_type),
        Command::Realize { file, graph } => realize(&load(file, graph.as_deref())?),
        Command::Gen { vertices, seed, count } => gen(*vertices, *seed, *count),
    }
}

fn validate(g: &Graph) -> Result<Outcome, Failure> {
    let report = match g {
        Graph::FourColour(g) => validate_four_colour(g),
        Graph::Equipped(u) => validate_equipped(u),
    };
    let mut lines = vec![boolean("admissible", report.is_empty())];
    for v in &report.violations {
        lines.push(text("violation", format!("{} {}", v.code, v.detail)));
    }
    Ok(Outcome {
        lines,
        verdict: report.is_empty(),
    })
}

fn invariants(g: &Graph) -> Result<Outcome, Failure> {
    let (st, nu) = match g {
        Graph::FourColour(g) => {
            let c = census(g)?;
            (surface_type_four_colour(g)?, Some(c))
        }
        Graph::Equipped(u) => (surface_type_equipped(u)?, None),
    };
    let mut lines = vec![
        int("chi", st.chi),
        boolean("orientable", st.orientable),
        int("genus", st.genus as i64),
    ];
    if let Some(c) = nu {
        lines.push(kv(
            "nu",
            format!("{},{},{}", c.nu0, c.nu1, c.nu2),
            json!([c.nu0, c.nu1, c.nu2]),
        ));
    }
    ok(lines)
}

fn cycle_lines(g: &crate::model::FourColourGraph, lines: &mut Vec<Line>) -> Result<(), Failure> {
    let groups: [(&'static str, Vec<OrientedCycle>); 3] = [
        ("tu", enumerate_tu_cycles(g)?),
        ("st", enumerate_st_cycles(g)?),
        ("cstar", enumerate_cstar_cycles(g)?),
    ];
    for (key, cs) in groups {
        lines.extend(cs.iter().map(|c| text(key, c.format(g))));
    }
    Ok(())
}

fn cycles(g: &Graph) -> Result<Outcome, Failure> {
    let mut lines = Vec::new();
    match g {
        Graph::FourColour(g) => cycle_lines(g, &mut lines)?,
        Graph::Equipped(u) => {
            let report = validate_equipped(u);
            if !report.is_empty() {
                return Err(Error::NotAdmissible(report).into());
            }
            for x in u.vertices() {
                if let VertexKind::M(g) = &x.kind {
                    lines.push(text("m", x.id.clone()));
                    cycle_lines(g, &mut lines)?;
                }
            }
        }
    }
    ok(lines)
}

fn iso(g1: &Graph, g2: &Graph, oracle: bool, emit_mapping: bool) -> Result<Outcome, Failure> {
    // (verdict, mapping as id pairs)
    let (verdict, pairs): (bool, Vec<(String, String)>) = match (g1, g2) {
        (Graph::FourColour(a), Graph::FourColour(b)) => {
            let map = if oracle {
                direct_four_colour_map(a, b, OracleBudget::default()).map_err(input_on_invalid)?
            } else {
                four_colour_iso_certificate(a, b)
                    .map_err(input_on_invalid)?
                    .map(|c| four_colour_vertex_map(&c, a))
            };
            let pairs = map
                .iter()
                .flat_map(|m| {
                    m.iter()
                        .enumerate()
                        .map(|(v, &w)| (a.vertex_id(v).to_string(), b.vertex_id(w).to_string()))
                })
                .collect();
            (map.is_some(), pairs)
        }
        (Graph::Equipped(a), Graph::Equipped(b)) => {
            let map = if oracle {
                direct_equipped_map(a, b, OracleBudget::default()).map_err(input_on_invalid)?
            } else {
                let (_, l1) = to_simple_equipped_with_layout(a).map_err(input_on_invalid)?;
                let (_, l2) = to_simple_equipped_with_layout(b).map_err(input_on_invalid)?;
                equipped_iso_certificate(a, b)
                    .map_err(input_on_invalid)?
                    .map(|c| equipped_vertex_map(&c, &l1, &l2))
            };
            let pairs = map
                .iter()
                .flat_map(|m| {
                    m.iter()
                        .enumerate()
                        .map(|(v, &w)| (a.vertex(v).id.clone(), b.vertex(w).id.clone()))
                })
                .collect();
            (map.is_some(), pairs)
        }
        _ => {
            return Err(Failure::Input(
                "cannot compare a four-colour graph with an equipped graph".into(),
            ))
        }
    };
    let mut lines = vec![boolean("isomorphic", verdict)];
    if emit_mapping {
        lines.extend(
            pairs
                .into_iter()
                .map(|(a, b)| kv("map", format!("{a} {b}"), json!([a, b]))),
        );
    }
    Ok(Outcome { lines, verdict })
}

/// `iso` reserves exit 1 for "not isomorphic", so invalid graphs are input
/// errors there.
fn input_on_invalid(e: Error) -> Failure {
    Failure::Input(e.to_string())
}

fn edge_lines(sg: &SimpleGraph) -> Vec<Line> {
    sg.edges()
        .into_iter()
        .map(|(a, b)| Line {
            key: "edge",
            text: format!("{a} {b}"),
            json: json!([a, b]),
            bare: true,
        })
        .collect()
}

fn reduce(g: &Graph) -> Result<Outcome, Failure> {
    let sg = match g {
        Graph::FourColour(g) => to_simple_four_colour(g)?,
        Graph::Equipped(u) => to_simple_equipped(u)?,
    };
    ok(edge_lines(&sg))
}

fn read_edge_list(path: &PathBuf) -> Result<SimpleGraph, Failure> {
    let body = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut edges = Vec::new();
    for (i, raw) in body.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums: Vec<usize> = content
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Input(format!("line {}: expected `u v`", i + 1)))?;
        match nums[..] {
            [a, b] => edges.push((a, b)),
            _ => return Err(Failure::Input(format!("line {}: expected `u v`", i + 1))),
        }
    }
    let n = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    SimpleGraph::from_edges(n, edges).map_err(|e| Failure::Input(e.to_string()))
}

fn restore(path: &PathBuf, as_type: Option<GraphType>) -> Result<Outcome, Failure> {
    let sg = read_edge_list(path)?;
    let kind = as_type.unwrap_or(if (0..sg.vertex_count()).any(|v| sg.degree(v) == 1) {
        GraphType::Eqg
    } else {
        GraphType::Fcg
    });
    let graph = match kind {
        GraphType::Fcg => Graph::FourColour(restore_four_colour(&sg)?),
        GraphType::Eqg => Graph::Equipped(restore_equipped(&sg)?),
    };
    ok(raw_lines(&serialize(&[graph])))
}

fn realize(g: &Graph) -> Result<Outcome, Failure> {
    match g {
        Graph::FourColour(g) => {
            let cc = glue(g)?;
            ok(vec![
                int("F", cc.face_count() as i64),
                int("E", cc.edge_count() as i64),
                int("V", cc.vertex_count() as i64),
                int("chi", complex_euler(&cc)),
                boolean("orientable", complex_orientable(&cc)),
            ])
        }
        Graph::Equipped(u) => ok(vec![int("chi", equipped_euler_oracle(u)?)]),
    }
}

fn gen(vertices: usize, seed: u64, count: u64) -> Result<Outcome, Failure> {
    let mut graphs = Vec::new();
    for s in seed..seed.saturating_add(count) {
        graphs.push(Graph::FourColour(random_admissible(vertices, s)?));
    }
    ok(raw_lines(&serialize(&graphs)))
}
