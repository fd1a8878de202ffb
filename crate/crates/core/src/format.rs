//! The line-oriented `.eg` text format.
//!
//! ```text
//! fcg <name>
//! v <vid>
//! e <eid> s|t|u <v1> <v2>
//! e <eid> c <v1> <pos1> <v2> <pos2>
//! end
//!
//! eqg <name>
//! vx <vid> A | E+ | E- | L | M:<fcg-name>
//! ed <eid> <tail> <head> [cycle <v0> <e0> <v1> <e1> ...]
//! end
//! ```
//!
//! `#` starts a comment. An eqg block may only name fcg blocks defined above
//! it in the same file.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::error::Error;
use crate::model::{Colour, EquippedGraph, FourColourGraph, OrientedCycle, VertexKind, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown reference {name}")]
    UnknownReference { line: usize, name: String },

    #[error("line {line}: duplicate name {name}")]
    DuplicateName { line: usize, name: String },

    #[error("{0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    FourColour(FourColourGraph),
    Equipped(EquippedGraph),
}

impl Graph {
    pub fn name(&self) -> &str {
        match self {
            Graph::FourColour(g) => g.name(),
            Graph::Equipped(u) => u.name(),
        }
    }
}

impl From<FourColourGraph> for Graph {
    fn from(g: FourColourGraph) -> Self {
        Graph::FourColour(g)
    }
}

impl From<EquippedGraph> for Graph {
    fn from(u: EquippedGraph) -> Self {
        Graph::Equipped(u)
    }
}

/// Picks a block by name, or the only block when `name` is `None`.
pub fn select<'a>(graphs: &'a [Graph], name: Option<&str>) -> Result<&'a Graph, String> {
    match name {
        Some(n) => graphs
            .iter()
            .find(|g| g.name() == n)
            .ok_or_else(|| format!("no graph named {n}")),
        None => match graphs {
            [g] => Ok(g),
            [] => Err("file holds no graph".into()),
            _ => {
                let names: Vec<&str> = graphs.iter().map(Graph::name).collect();
                Err(format!(
                    "file holds several graphs, pick one with --graph: {}",
                    names.join(", ")
                ))
            }
        },
    }
}

pub fn parse_file(path: impl AsRef<Path>) -> Result<Vec<Graph>, ParseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io(format!("{}: {e}", path.display())))?;
    parse_str(&text)
}

enum Open {
    Four(FourColourGraph),
    Equipped(EquippedGraph),
}

struct Parser {
    graphs: Vec<Graph>,
    fcgs: HashMap<String, FourColourGraph>,
    open: Option<(usize, Open)>,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Maps model errors raised while building a block to parse errors.
fn at_line(line: usize, e: Error) -> ParseError {
    match e {
        Error::DuplicateId(name) => ParseError::DuplicateName { line, name },
        Error::NoSuchVertex(name) | Error::NoSuchEdge(name) => ParseError::UnknownReference { line, name },
        other => syntax(line, other.to_string()),
    }
}

pub fn parse_str(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut p = Parser {
        graphs: Vec::new(),
        fcgs: HashMap::new(),
        open: None,
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        p.line(line, &tokens)?;
    }
    if let Some((start, _)) = p.open {
        return Err(syntax(start, "block is never closed with `end`"));
    }
    Ok(p.graphs)
}

impl Parser {
    fn line(&mut self, line: usize, tokens: &[&str]) -> Result<(), ParseError> {
        match (&mut self.open, tokens) {
            (None, ["fcg", name]) => self.begin(line, name, Open::Four(FourColourGraph::new(*name))),
            (None, ["eqg", name]) => self.begin(line, name, Open::Equipped(EquippedGraph::new(*name))),
            (None, _) => Err(syntax(
                line,
                format!("expected `fcg <name>` or `eqg <name>`, found `{}`", tokens.join(" ")),
            )),
            (Some(_), ["end"]) => {
                let (_, block) = self.open.take().expect("open block");
                match block {
                    Open::Four(g) => {
                        self.fcgs.insert(g.name().to_string(), g.clone());
                        self.graphs.push(Graph::FourColour(g));
                    }
                    Open::Equipped(u) => self.graphs.push(Graph::Equipped(u)),
                }
                Ok(())
            }
            (Some((_, Open::Four(g))), _) => four_colour_line(g, line, tokens),
            (Some((_, Open::Equipped(u))), _) => equipped_line(u, &self.fcgs, line, tokens),
        }
    }

    fn begin(&mut self, line: usize, name: &str, block: Open) -> Result<(), ParseError> {
        if self.graphs.iter().any(|g| g.name() == name) {
            return Err(ParseError::DuplicateName {
                line,
                name: name.into(),
            });
        }
        self.open = Some((line, block));
        Ok(())
    }
}

fn vertex(g: &FourColourGraph, line: usize, id: &str) -> Result<usize, ParseError> {
    g.vertex(id)
        .ok_or_else(|| ParseError::UnknownReference { line, name: id.into() })
}

fn position(line: usize, token: &str) -> Result<u32, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad c-order position `{token}`")))
}

fn four_colour_line(g: &mut FourColourGraph, line: usize, tokens: &[&str]) -> Result<(), ParseError> {
    match tokens {
        ["v", id] => g.add_vertex(*id).map(|_| ()).map_err(|e| at_line(line, e)),
        ["e", id, "c", a, p, b, q] => {
            let (a, b) = (vertex(g, line, a)?, vertex(g, line, b)?);
            let (p, q) = (position(line, p)?, position(line, q)?);
            g.add_c_edge(*id, a, p, b, q).map(|_| ()).map_err(|e| at_line(line, e))
        }
        ["e", id, colour, a, b] => {
            let colour = match Colour::parse(colour) {
                Some(c) if c != Colour::C => c,
                _ => return Err(syntax(line, format!("bad edge colour `{colour}`"))),
            };
            let (a, b) = (vertex(g, line, a)?, vertex(g, line, b)?);
            g.add_edge(*id, colour, a, b).map(|_| ()).map_err(|e| at_line(line, e))
        }
        _ => Err(syntax(line, format!("cannot read fcg line `{}`", tokens.join(" ")))),
    }
}

fn parse_kind(fcgs: &HashMap<String, FourColourGraph>, line: usize, token: &str) -> Result<VertexKind, ParseError> {
    Ok(match token {
        "A" => VertexKind::A,
        "E+" => VertexKind::E(Weight::Plus),
        "E-" => VertexKind::E(Weight::Minus),
        "L" => VertexKind::L,
        _ => match token.strip_prefix("M:") {
            Some(name) => VertexKind::M(fcgs.get(name).cloned().ok_or_else(|| ParseError::UnknownReference {
                line,
                name: name.into(),
            })?),
            None => return Err(syntax(line, format!("bad vertex kind `{token}`"))),
        },
    })
}

fn equipped_line(
    u: &mut EquippedGraph,
    fcgs: &HashMap<String, FourColourGraph>,
    line: usize,
    tokens: &[&str],
) -> Result<(), ParseError> {
    match tokens {
        ["vx", id, kind] => {
            let kind = parse_kind(fcgs, line, kind)?;
            u.add_vertex(*id, kind).map(|_| ()).map_err(|e| at_line(line, e))
        }
        ["ed", id, tail, head, rest @ ..] => {
            let find = |v: &str| {
                u.vertex_by_id(v)
                    .ok_or_else(|| ParseError::UnknownReference { line, name: v.into() })
            };
            let (t, h) = (find(tail)?, find(head)?);
            let cycle = match rest {
                [] => None,
                ["cycle", darts @ ..] if !darts.is_empty() && darts.len() % 2 == 0 => {
                    let g = [t, h]
                        .into_iter()
                        .find_map(|v| u.kind(v).four_colour())
                        .ok_or_else(|| syntax(line, "cycle on an edge without an M end"))?;
                    let pairs: Vec<(&str, &str)> = darts.chunks(2).map(|c| (c[0], c[1])).collect();
                    Some(OrientedCycle::from_ids(g, &pairs).map_err(|e| at_line(line, e))?)
                }
                _ => return Err(syntax(line, "expected `cycle v0 e0 v1 e1 ...`")),
            };
            u.add_edge(*id, t, h, cycle).map(|_| ()).map_err(|e| at_line(line, e))
        }
        _ => Err(syntax(line, format!("cannot read eqg line `{}`", tokens.join(" ")))),
    }
}

pub fn write_four_colour(out: &mut String, g: &FourColourGraph) {
    let _ = writeln!(out, "fcg {}", g.name());
    for id in g.vertex_ids() {
        let _ = writeln!(out, "v {id}");
    }
    for e in g.edges() {
        let [a, b] = e.ends.map(|v| g.vertex_id(v));
        match e.positions {
            Some([p, q]) => {
                let _ = writeln!(out, "e {} c {a} {p} {b} {q}", e.id);
            }
            None => {
                let _ = writeln!(out, "e {} {} {a} {b}", e.id, e.colour);
            }
        }
    }
    out.push_str("end\n");
}

/// Writes `u` with fcg names taken from `names[v]` for each M-vertex.
fn write_equipped_block(out: &mut String, u: &EquippedGraph, names: &[Option<String>]) {
    let _ = writeln!(out, "eqg {}", u.name());
    for (v, x) in u.vertices().iter().enumerate() {
        let kind = match &x.kind {
            VertexKind::M(_) => format!("M:{}", names[v].as_deref().expect("M-vertex has a block")),
            k => k.token(),
        };
        let _ = writeln!(out, "vx {} {kind}", x.id);
    }
    for edge in u.edges() {
        let (t, h) = (&u.vertex(edge.tail).id, &u.vertex(edge.head).id);
        let _ = write!(out, "ed {} {t} {h}", edge.id);
        let g = [edge.tail, edge.head].into_iter().find_map(|v| u.kind(v).four_colour());
        if let (Some(c), Some(g)) = (&edge.cycle, g) {
            let _ = write!(out, " cycle {}", c.format(g));
        }
        out.push('\n');
    }
    out.push_str("end\n");
}

/// Serializes a collection of graphs. The four-colour graphs carried by
/// M-vertices are written as fcg blocks ahead of the first eqg block that
/// needs them; equal graphs under the same name share one block and clashing
/// names get a numeric suffix.
pub fn serialize(graphs: &[Graph]) -> String {
    let mut out = String::new();
    let mut written: Vec<FourColourGraph> = Vec::new();
    let mut place = |out: &mut String, g: &FourColourGraph| -> String {
        if let Some(w) = written.iter().find(|w| *w == g) {
            return w.name().to_string();
        }
        let mut name = g.name().to_string();
        let mut k = 1;
        while written.iter().any(|w| w.name() == name)
            || graphs
                .iter()
                .any(|x| matches!(x, Graph::Equipped(u) if u.name() == name))
        {
            k += 1;
            name = format!("{}_{k}", g.name());
        }
        let mut g = g.clone();
        g.set_name(name.clone());
        write_four_colour(out, &g);
        out.push('\n');
        written.push(g);
        name
    };
    for graph in graphs {
        match graph {
            Graph::FourColour(g) => {
                place(&mut out, g);
            }
            Graph::Equipped(u) => {
                let names: Vec<Option<String>> = u
                    .vertices()
                    .iter()
                    .map(|x| x.kind.four_colour().map(|g| place(&mut out, g)))
                    .collect();
                write_equipped_block(&mut out, u, &names);
                out.push('\n');
            }
        }
    }
    while out.ends_with("\n\n") {
        out.pop();
    }
    out
}

pub fn serialize_four_colour(g: &FourColourGraph) -> String {
    serialize(&[Graph::FourColour(g.clone())])
}

pub fn serialize_equipped(u: &EquippedGraph) -> String {
    serialize(&[Graph::Equipped(u.clone())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_round_trip() {
        let mut graphs: Vec<Graph> = vec![fixtures::sphere4().into()];
        graphs.extend(fixtures::equipped_all().into_iter().map(Graph::from));
        let text = serialize(&graphs);
        assert_eq!(parse_str(&text).unwrap(), graphs);
        assert_eq!(text.matches("fcg SPHERE4").count(), 1);
    }

    #[test]
    fn reports_lines() {
        let err = parse_str("fcg G\nv 1\nv 1\nend\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::DuplicateName {
                line: 3,
                name: "1".into()
            }
        );
        let err = parse_str("eqg U\nvx m1 M:missing\nend\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownReference {
                line: 2,
                name: "missing".into()
            }
        );
        let err = parse_str("fcg G\nv 1\ne x q 1 1\nend\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        let err = parse_str("fcg G\nv 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
        let err = parse_str("fcg G\nend\nfcg G\nend\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::DuplicateName {
                line: 3,
                name: "G".into()
            }
        );
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_str("# header\n\nfcg G # trailing\n  v 1   \nend\n").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].name(), "G");
    }

    #[test]
    fn clashing_fcg_names_are_renamed() {
        let a = fixtures::sphere4();
        let mut b = fixtures::sphere4_rewired();
        b.set_name(a.name());
        let text = serialize(&[a.into(), b.into()]);
        assert!(text.contains("fcg SPHERE4_2"));
    }

    #[test]
    fn selection() {
        let graphs: Vec<Graph> = fixtures::equipped_all().into_iter().map(Graph::from).collect();
        assert_eq!(select(&graphs, Some("PROJ_AL")).unwrap().name(), "PROJ_AL");
        assert!(select(&graphs, None).is_err());
        assert!(select(&graphs[..1], None).is_ok());
    }
}
