//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n 4
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is `n <count>`; every following non-comment
//! line is a pair of 1-based labels. Blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::MissingHeader);
                }
                let count = parse_label(fields[1], line_no)?;
                if count < 1 {
                    return Err(Error::EmptyGraph);
                }
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `<u> <v>`, found `{line}`"),
                    });
                }
                let u = parse_label(fields[0], line_no)?;
                let v = parse_label(fields[1], line_no)?;
                for label in [u, v] {
                    if label < 1 || label > count {
                        return Err(Error::VertexOutOfRange { label, n: count });
                    }
                }
                pairs.push((u, v));
            }
        }
    }
    let n = n.ok_or(Error::MissingHeader)?;
    Graph::from_edge_list(n, &pairs)
}

fn parse_label(field: &str, line: usize) -> Result<usize> {
    field.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("`{field}` is not a non-negative integer"),
    })
}

/// Canonical text form: header plus edges in lexicographic order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.order()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_graph_file(path: &std::path::Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}
