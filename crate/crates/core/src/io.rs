//! Text format for colored graphs.
//!
//! First line `n m`, then `m` lines `u v c` with `0 <= u < v < n` and
//! `1 <= c <= n`, whitespace-separated. Lines whose first non-blank
//! character is `#` are comments. Line order does not affect the parsed
//! graph: construction canonicalizes the edge list.

use std::io::{BufRead, Write};

use thiserror::Error;

use crate::graph::{ColoredGraph, GraphError};

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: loop edge {v}-{v} (graph must be simple)")]
    Loop { line: usize, v: u32 },
    #[error("line {line}: duplicate edge {u}-{v}")]
    Duplicate { line: usize, u: u32, v: u32 },
    #[error("line {line}: color {c} out of range 1..={max}")]
    ColorRange { line: usize, c: u32, max: u32 },
    #[error("line {line}: vertex {v} out of range 0..{n}")]
    VertexRange { line: usize, v: u32, n: usize },
    #[error("line {line}: endpoints must satisfy u < v, got {u} {v}")]
    EndpointOrder { line: usize, u: u32, v: u32 },
    #[error("expected {expected} edge lines, found {got}")]
    EdgeCount { expected: usize, got: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parses the text format into a validated [`ColoredGraph`].
pub fn read_colored_graph<R: BufRead>(source: R) -> Result<ColoredGraph, ReadError> {
    let mut header: Option<(usize, usize)> = None;
    let mut triples: Vec<(u32, u32, u32)> = Vec::new();
    let mut lines_with_numbers: Vec<(usize, u32, u32)> = Vec::new();

    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if header.is_none() {
            if fields.len() != 2 {
                return Err(ReadError::Parse {
                    line: line_no,
                    msg: format!("expected header \"n m\", got {trimmed:?}"),
                });
            }
            let n = parse_field(fields[0], line_no, "n")? as usize;
            let m = parse_field(fields[1], line_no, "m")? as usize;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header.unwrap();
        if fields.len() != 3 {
            return Err(ReadError::Parse {
                line: line_no,
                msg: format!("expected edge line \"u v c\", got {trimmed:?}"),
            });
        }
        let u = parse_field(fields[0], line_no, "u")?;
        let v = parse_field(fields[1], line_no, "v")?;
        let c = parse_field(fields[2], line_no, "c")?;
        if u == v {
            return Err(ReadError::Loop { line: line_no, v: u });
        }
        if u > v {
            return Err(ReadError::EndpointOrder { line: line_no, u, v });
        }
        if v as usize >= n {
            return Err(ReadError::VertexRange { line: line_no, v, n });
        }
        if c < 1 || c as usize > n {
            return Err(ReadError::ColorRange {
                line: line_no,
                c,
                max: n as u32,
            });
        }
        lines_with_numbers.push((line_no, u, v));
        triples.push((u, v, c));
    }

    let (n, m) = header.ok_or(ReadError::MissingHeader)?;
    if triples.len() != m {
        return Err(ReadError::EdgeCount {
            expected: m,
            got: triples.len(),
        });
    }
    match ColoredGraph::new(n, triples) {
        Ok(g) => Ok(g),
        Err(GraphError::DuplicateEdge(u, v)) => {
            let line = lines_with_numbers
                .iter()
                .filter(|&&(_, a, b)| (a, b) == (u, v))
                .map(|&(l, _, _)| l)
                .max()
                .unwrap_or(0);
            Err(ReadError::Duplicate { line, u, v })
        }
        Err(e) => Err(ReadError::Parse {
            line: 0,
            msg: e.to_string(),
        }),
    }
}

fn parse_field(s: &str, line: usize, name: &str) -> Result<u32, ReadError> {
    s.parse().map_err(|_| ReadError::Parse {
        line,
        msg: format!("cannot parse {name} from {s:?}"),
    })
}

/// Writes the canonical text form of `g`.
pub fn write_colored_graph<W: Write>(g: &ColoredGraph, sink: W) -> std::io::Result<()> {
    write_colored_graph_with_comments(g, sink, &[])
}

/// Writes `g` with leading `#` comment lines (generator parameters and the
/// like).
pub fn write_colored_graph_with_comments<W: Write>(
    g: &ColoredGraph,
    mut sink: W,
    comments: &[String],
) -> std::io::Result<()> {
    for c in comments {
        writeln!(sink, "# {c}")?;
    }
    writeln!(sink, "{} {}", g.vertex_count(), g.edge_count())?;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        writeln!(sink, "{} {} {}", u, v, g.color(i))?;
    }
    Ok(())
}
