//! Graph, colouring, certificate and map serialization.
//!
//! * DIMACS: `p edge |V| |E|` then `e i j` per edge, 1-based, ascending.
//! * Edge list: `label_u label_v` per edge.
//! * Structured: a versioned record carrying labels, `n_hint` and sorted
//!   adjacency, which [`parse_structured`] reads back losslessly.

use std::fmt::Write;
use std::str::FromStr;

use edgecrit_core::criticality::CertificateColoring;
use edgecrit_core::graph::Color;
use edgecrit_core::{ChordSpace, Coloring, Graph, VertexId};

use crate::error::{parse_error, Result};

pub const STRUCTURED_MAGIC: &str = "edgecrit-graph";
pub const STRUCTURED_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    Edgelist,
    Structured,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "dimacs" => Ok(ExportFormat::Dimacs),
            "edgelist" => Ok(ExportFormat::Edgelist),
            "structured" => Ok(ExportFormat::Structured),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub fn export_graph(g: &Graph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dimacs => to_dimacs(g),
        ExportFormat::Edgelist => to_edgelist(g),
        ExportFormat::Structured => to_structured(g),
    }
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.u.0 + 1, e.v.0 + 1).unwrap();
    }
    out
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        writeln!(out, "{} {}", g.label(e.u), g.label(e.v)).unwrap();
    }
    out
}

pub fn to_structured(g: &Graph) -> String {
    let mut out = format!("{STRUCTURED_MAGIC} {STRUCTURED_VERSION}\n");
    match g.n_hint() {
        Some(n) => writeln!(out, "n_hint {n}").unwrap(),
        None => out.push_str("n_hint -\n"),
    }
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for v in g.vertices() {
        writeln!(out, "v {} {}", v.0, g.label(v)).unwrap();
    }
    writeln!(out, "edges {}", g.edge_count()).unwrap();
    for v in g.vertices() {
        write!(out, "a {}", v.0).unwrap();
        for w in g.neighbors(v) {
            write!(out, " {}", w.0).unwrap();
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn parse_num<T: FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_error(line, format!("expected {what}")))
}

/// Reads a record written by [`to_structured`].
pub fn parse_structured(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    let mut next = |expect: &str| {
        lines
            .next()
            .ok_or_else(|| parse_error(0, format!("unexpected end of input, expected {expect}")))
    };

    let (no, header) = next("header")?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some(STRUCTURED_MAGIC) {
        return Err(parse_error(no, "not a structured graph record"));
    }
    let version: u32 = parse_num(tokens.next(), no, "version")?;
    if version != STRUCTURED_VERSION {
        return Err(parse_error(no, format!("unsupported version {version}")));
    }

    let (no, line) = next("n_hint")?;
    let n_hint = match line.strip_prefix("n_hint ") {
        Some("-") => None,
        Some(value) => Some(parse_num(Some(value), no, "n_hint")?),
        None => return Err(parse_error(no, "expected n_hint")),
    };

    let (no, line) = next("vertices")?;
    let count: usize = parse_num(line.strip_prefix("vertices "), no, "vertex count")?;
    let mut g = Graph::new();
    g.set_n_hint(n_hint);
    for expected in 0..count {
        let (no, line) = next("vertex line")?;
        let mut tokens = line.splitn(3, ' ');
        if tokens.next() != Some("v") {
            return Err(parse_error(no, "expected vertex line"));
        }
        let id: usize = parse_num(tokens.next(), no, "vertex id")?;
        if id != expected {
            return Err(parse_error(
                no,
                format!("vertex ids must be contiguous, got {id}"),
            ));
        }
        let label = tokens
            .next()
            .filter(|l| !l.is_empty())
            .ok_or_else(|| parse_error(no, "missing label"))?;
        g.add_vertex(label)?;
    }

    let (no, line) = next("edges")?;
    let edge_count: usize = parse_num(line.strip_prefix("edges "), no, "edge count")?;
    let mut listed: Vec<Vec<usize>> = Vec::with_capacity(count);
    for expected in 0..count {
        let (no, line) = next("adjacency line")?;
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("a") {
            return Err(parse_error(no, "expected adjacency line"));
        }
        let id: usize = parse_num(tokens.next(), no, "vertex id")?;
        if id != expected {
            return Err(parse_error(no, format!("adjacency out of order at {id}")));
        }
        let mut previous = None;
        let mut row = Vec::new();
        for token in tokens {
            let w: usize = parse_num(Some(token), no, "neighbour id")?;
            if previous.is_some_and(|p| p >= w) {
                return Err(parse_error(no, "neighbours must be strictly increasing"));
            }
            previous = Some(w);
            if w >= count {
                return Err(parse_error(no, format!("neighbour {w} out of range")));
            }
            g.add_edge(VertexId(id), VertexId(w))?;
            row.push(w);
        }
        listed.push(row);
    }
    let (no, line) = next("end")?;
    if line != "end" {
        return Err(parse_error(no, "expected end"));
    }
    let symmetric = g.vertices().all(|v| {
        g.neighbors(v)
            .map(VertexId::index)
            .eq(listed[v.0].iter().copied())
    });
    if g.edge_count() != edge_count || !symmetric {
        return Err(parse_error(
            no,
            "adjacency is not symmetric or edge count is wrong",
        ));
    }
    Ok(g)
}

/// Reads a DIMACS edge file. Vertices are labelled `1..=|V|`; comment lines
/// (`c`) are ignored.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    let mut declared_edges = 0;
    for (i, line) in text.lines().enumerate() {
        let no = i + 1;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(parse_error(no, "duplicate problem line"));
                }
                if !matches!(tokens.next(), Some("edge" | "col")) {
                    return Err(parse_error(no, "expected `p edge`"));
                }
                let count: usize = parse_num(tokens.next(), no, "vertex count")?;
                declared_edges = parse_num(tokens.next(), no, "edge count")?;
                g = Some(Graph::from_edges(count, &[])?);
            }
            Some("e") => {
                let graph = g
                    .as_mut()
                    .ok_or_else(|| parse_error(no, "edge before problem line"))?;
                let u: usize = parse_num(tokens.next(), no, "endpoint")?;
                let v: usize = parse_num(tokens.next(), no, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_error(no, "vertices are 1-based"));
                }
                graph.add_edge(VertexId(u - 1), VertexId(v - 1))?;
            }
            Some(other) => return Err(parse_error(no, format!("unknown line type {other:?}"))),
        }
    }
    let g = g.ok_or_else(|| parse_error(0, "missing problem line"))?;
    if g.edge_count() != declared_edges {
        return Err(parse_error(
            0,
            format!("declared {declared_edges} edges, found {}", g.edge_count()),
        ));
    }
    Ok(g)
}

/// `vertex_label colour` for every coloured vertex, in vertex order.
pub fn coloring_lines(g: &Graph, c: &Coloring, name: impl Fn(Color) -> String) -> String {
    let mut out = String::new();
    for (v, color) in c.iter() {
        if v.0 < g.vertex_count() {
            writeln!(out, "{} {}", g.label(v), name(color)).unwrap();
        }
    }
    out
}

/// Certificate record: a header `n case edge A x` and one `chord colour`
/// line per chord, extra colours written `l1`, `l2`, `l3`.
pub fn certificate_text(space: &ChordSpace, cert: &CertificateColoring) -> String {
    let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let mut out = String::from("# n case edge A x\n");
    writeln!(
        out,
        "{} {} {},{} {} {}",
        cert.n,
        cert.case(),
        cert.normalized.ab,
        cert.normalized.cd,
        join(&cert.a_set),
        cert.x.map_or_else(|| "-".to_string(), |x| x.to_string()),
    )
    .unwrap();
    for (v, color) in cert.assignment.iter() {
        writeln!(out, "{} {}", space.chord(v), cert.color_name(color)).unwrap();
    }
    out
}
