//! Plain-text graph files.
//!
//! ```text
//! n r z
//! E u v      # undirected edge, u < v
//! A u v      # arc u -> v
//! ```
//!
//! Vertices are 0-based and `#` starts a comment. The writer emits edges and
//! then arcs, each in lexicographic order, so output is byte-stable. `r` and
//! `z` in the header are the maximum undirected degree and out-degree.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use super::MixedGraph;
use crate::error::GraphError;

pub fn write_graph(graph: &MixedGraph, mut out: impl Write) -> io::Result<()> {
    let n = graph.order();
    let r = (0..n).map(|v| graph.neighbors(v).len()).max().unwrap_or(0);
    let z = (0..n).map(|v| graph.out_arcs(v).len()).max().unwrap_or(0);
    writeln!(out, "{n} {r} {z}")?;
    for &(u, v) in graph.edges() {
        writeln!(out, "E {u} {v}")?;
    }
    for &(u, v) in graph.arcs() {
        writeln!(out, "A {u} {v}")?;
    }
    Ok(())
}

pub fn read_graph(path: &Path) -> Result<MixedGraph, GraphError> {
    parse_graph(&fs::read_to_string(path)?)
}

pub fn parse_graph(text: &str) -> Result<MixedGraph, GraphError> {
    let err = |line: usize, message: String| GraphError::Parse { line, message };
    let mut lines = text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    });
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "empty graph file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let numbers: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
    let n = match numbers.as_deref() {
        Some(&[n, _r, _z]) => n,
        _ => {
            return Err(err(
                header_line,
                format!("expected header `n r z`, found {header:?}"),
            ))
        }
    };

    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (kind, u, v) = match fields.as_slice() {
            [kind, u, v] => (*kind, *u, *v),
            _ => {
                return Err(err(
                    line_no,
                    format!("expected `E u v` or `A u v`, found {line:?}"),
                ))
            }
        };
        let parse_vertex = |tok: &str| -> Result<usize, GraphError> {
            let v: usize = tok
                .parse()
                .map_err(|_| err(line_no, format!("bad vertex {tok:?}")))?;
            if v >= n {
                return Err(err(line_no, format!("vertex {v} outside 0..{n}")));
            }
            Ok(v)
        };
        let pair = (parse_vertex(u)?, parse_vertex(v)?);
        match kind {
            "E" => edges.push(pair),
            "A" => arcs.push(pair),
            other => return Err(err(line_no, format!("unknown record type {other:?}"))),
        }
    }
    MixedGraph::new(n, edges, arcs)
}
