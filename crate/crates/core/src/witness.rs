//! Cycle witnesses and their checkers.
//!
//! A witness is the artifact every search returns: the cyclic vertex
//! sequence, the edge colors along it, and a provenance tag naming the
//! branch that produced it. Two checkers exist on purpose: the primary one
//! resolves edges through the canonical edge index, the re-checker walks raw
//! adjacency lists, so a bug in either lookup path cannot silently vouch for
//! itself.

use std::collections::HashSet;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::Digraph;
use crate::graph::ColoredGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HostKind {
    #[serde(rename = "undirected")]
    Undirected,
    #[serde(rename = "directed")]
    Directed,
}

/// A cycle found in a host graph or digraph.
///
/// `vertices` lists the cycle once, without repeating the start; `colors`
/// holds the edge colors in traversal order (`colors[i]` is the color of the
/// edge from `vertices[i]` to `vertices[(i+1) % len]`) and is empty when the
/// host carries no coloring, in which case `rainbow` is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub kind: HostKind,
    pub vertices: Vec<u32>,
    pub colors: Vec<u32>,
    pub length: usize,
    pub rainbow: bool,
    pub provenance: String,
}

impl CycleWitness {
    pub fn undirected(vertices: Vec<u32>, colors: Vec<u32>, provenance: impl Into<String>) -> Self {
        let length = vertices.len();
        let rainbow = !colors.is_empty() && all_distinct(&colors);
        Self {
            kind: HostKind::Undirected,
            vertices,
            colors,
            length,
            rainbow,
            provenance: provenance.into(),
        }
    }

    pub fn directed(vertices: Vec<u32>, colors: Vec<u32>, provenance: impl Into<String>) -> Self {
        let length = vertices.len();
        let rainbow = !colors.is_empty() && all_distinct(&colors);
        Self {
            kind: HostKind::Directed,
            vertices,
            colors,
            length,
            rainbow,
            provenance: provenance.into(),
        }
    }
}

fn all_distinct(colors: &[u32]) -> bool {
    let mut seen = HashSet::with_capacity(colors.len());
    colors.iter().all(|c| seen.insert(*c))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("length field {stated} does not match {actual} vertices")]
    LengthMismatch { stated: usize, actual: usize },
    #[error("cycle of length {len} is too short for a {kind} host")]
    TooShort { len: usize, kind: &'static str },
    #[error("vertex {0} repeats in the cycle")]
    RepeatedVertex(u32),
    #[error("vertices {0} and {1} are not adjacent in the host")]
    NotAdjacent(u32, u32),
    #[error("no arc {0} -> {1} in the host digraph")]
    MissingArc(u32, u32),
    #[error("color list has {got} entries, expected {expected} or none")]
    ColorCount { got: usize, expected: usize },
    #[error("edge {u}-{v} has color {host} in the host, witness says {stated}")]
    WrongColor { u: u32, v: u32, host: u32, stated: u32 },
    #[error("rainbow flag is {stated}, colors say {actual}")]
    RainbowFlag { stated: bool, actual: bool },
    #[error("vertex {v} out of range for host with {n} vertices")]
    VertexRange { v: u32, n: usize },
}

/// Structural checks that need no host: length bookkeeping, distinctness,
/// color-count sanity, and the rainbow flag.
pub fn check_consistency(w: &CycleWitness) -> Result<(), WitnessError> {
    if w.length != w.vertices.len() {
        return Err(WitnessError::LengthMismatch {
            stated: w.length,
            actual: w.vertices.len(),
        });
    }
    let min_len = match w.kind {
        HostKind::Undirected => 3,
        HostKind::Directed => 2,
    };
    if w.length < min_len {
        return Err(WitnessError::TooShort {
            len: w.length,
            kind: match w.kind {
                HostKind::Undirected => "undirected",
                HostKind::Directed => "directed",
            },
        });
    }
    let mut seen = HashSet::with_capacity(w.length);
    for &v in &w.vertices {
        if !seen.insert(v) {
            return Err(WitnessError::RepeatedVertex(v));
        }
    }
    if !w.colors.is_empty() && w.colors.len() != w.length {
        return Err(WitnessError::ColorCount {
            got: w.colors.len(),
            expected: w.length,
        });
    }
    let actual = !w.colors.is_empty() && all_distinct(&w.colors);
    if w.rainbow != actual {
        return Err(WitnessError::RainbowFlag {
            stated: w.rainbow,
            actual,
        });
    }
    Ok(())
}

/// Full witness check against an undirected colored host, resolving edges
/// through the canonical edge index.
pub fn verify_in_graph(g: &ColoredGraph, w: &CycleWitness) -> Result<(), WitnessError> {
    check_consistency(w)?;
    if w.kind != HostKind::Undirected {
        return Err(WitnessError::TooShort { len: w.length, kind: "directed" });
    }
    for (i, &v) in w.vertices.iter().enumerate() {
        if v as usize >= g.vertex_count() {
            return Err(WitnessError::VertexRange {
                v,
                n: g.vertex_count(),
            });
        }
        let u = w.vertices[(i + 1) % w.length];
        let e = g
            .edge_between(v, u)
            .ok_or(WitnessError::NotAdjacent(v, u))?;
        if !w.colors.is_empty() {
            let host = g.color(e);
            if host != w.colors[i] {
                return Err(WitnessError::WrongColor {
                    u: v,
                    v: u,
                    host,
                    stated: w.colors[i],
                });
            }
        }
    }
    Ok(())
}

/// Independent re-checker: walks the host's adjacency lists with linear
/// scans and re-derives the colors and the rainbow flag from scratch.
pub fn reverify_walk(g: &ColoredGraph, w: &CycleWitness) -> Result<(), WitnessError> {
    if w.kind != HostKind::Undirected {
        return Err(WitnessError::TooShort { len: w.length, kind: "directed" });
    }
    if w.length != w.vertices.len() || w.length < 3 {
        return Err(WitnessError::LengthMismatch {
            stated: w.length,
            actual: w.vertices.len(),
        });
    }
    let mut sorted = w.vertices.clone();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(WitnessError::RepeatedVertex(pair[0]));
        }
    }
    let mut derived = Vec::with_capacity(w.length);
    for (i, &v) in w.vertices.iter().enumerate() {
        if v as usize >= g.vertex_count() {
            return Err(WitnessError::VertexRange {
                v,
                n: g.vertex_count(),
            });
        }
        let u = w.vertices[(i + 1) % w.length];
        let mut found = None;
        for &e in g.incident(v) {
            if g.other_end(e as usize, v) == u {
                found = Some(e as usize);
                break;
            }
        }
        let e = found.ok_or(WitnessError::NotAdjacent(v, u))?;
        derived.push(g.color(e));
    }
    if !w.colors.is_empty() && derived != w.colors {
        return Err(WitnessError::ColorCount {
            got: w.colors.len(),
            expected: w.length,
        });
    }
    // Distinctness via sorting, so this path shares nothing with the
    // hash-set route in check_consistency.
    let mut dsorted = derived;
    dsorted.sort_unstable();
    let distinct = dsorted.windows(2).all(|p| p[0] != p[1]);
    if !w.colors.is_empty() && w.rainbow != distinct {
        return Err(WitnessError::RainbowFlag {
            stated: w.rainbow,
            actual: distinct,
        });
    }
    Ok(())
}

/// Witness check against a digraph host, following arcs in order.
pub fn verify_in_digraph(d: &Digraph, w: &CycleWitness) -> Result<(), WitnessError> {
    check_consistency(w)?;
    if w.kind != HostKind::Directed {
        return Err(WitnessError::TooShort { len: w.length, kind: "undirected" });
    }
    for (i, &v) in w.vertices.iter().enumerate() {
        if v as usize >= d.vertex_count() {
            return Err(WitnessError::VertexRange {
                v,
                n: d.vertex_count(),
            });
        }
        let u = w.vertices[(i + 1) % w.length];
        if d.arc_between(v, u).is_none() {
            return Err(WitnessError::MissingArc(v, u));
        }
    }
    Ok(())
}

/// Serializes a witness as a single JSON object followed by a newline.
pub fn write_witness<W: Write>(w: &CycleWitness, mut sink: W) -> std::io::Result<()> {
    serde_json::to_writer(&mut sink, w)?;
    sink.write_all(b"\n")
}

/// Reads back a witness written by [`write_witness`].
pub fn read_witness<R: Read>(source: R) -> Result<CycleWitness, serde_json::Error> {
    serde_json::from_reader(source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredGraph;

    fn triangle() -> ColoredGraph {
        ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap()
    }

    #[test]
    fn triangle_witness_roundtrip() {
        let w = CycleWitness::undirected(vec![0, 1, 2], vec![1, 2, 3], "test");
        assert!(w.rainbow);
        let mut buf = Vec::new();
        write_witness(&w, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("\"kind\":\"undirected\""));
        assert!(text.contains("\"rainbow\":true"));
        let back = read_witness(&buf[..]).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn directed_two_cycle_is_legal() {
        let w = CycleWitness::directed(vec![0, 1], vec![], "digon");
        check_consistency(&w).unwrap();
        let mut buf = Vec::new();
        write_witness(&w, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains("\"kind\":\"directed\""));
    }

    #[test]
    fn repeated_color_clears_rainbow() {
        let w = CycleWitness::undirected(vec![0, 1, 2], vec![1, 1, 2], "test");
        assert!(!w.rainbow);
        check_consistency(&w).unwrap();
        let mut buf = Vec::new();
        write_witness(&w, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().contains("\"rainbow\":false"));
    }

    #[test]
    fn checkers_agree_on_valid_witness() {
        let g = triangle();
        let w = CycleWitness::undirected(vec![0, 1, 2], vec![1, 2, 3], "test");
        verify_in_graph(&g, &w).unwrap();
        reverify_walk(&g, &w).unwrap();
    }

    #[test]
    fn checkers_agree_on_forged_witness() {
        let g = triangle();
        let mut w = CycleWitness::undirected(vec![0, 1, 2], vec![1, 2, 3], "test");
        w.colors[2] = 1; // forged color
        assert!(verify_in_graph(&g, &w).is_err());
        assert!(reverify_walk(&g, &w).is_err());

        let w2 = CycleWitness::undirected(vec![0, 1, 2, 2], vec![], "test");
        assert!(verify_in_graph(&g, &w2).is_err());
        assert!(reverify_walk(&g, &w2).is_err());
    }

    #[test]
    fn undirected_two_cycle_rejected() {
        let w = CycleWitness::undirected(vec![0, 1], vec![1, 2], "test");
        assert!(matches!(
            check_consistency(&w),
            Err(WitnessError::TooShort { len: 2, .. })
        ));
    }
}
