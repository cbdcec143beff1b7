//! Simple digraphs, with optional provenance back to a colored host graph.

use thiserror::Error;

use crate::graph::ColoredGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("loop arc at vertex {0}")]
    Loop(u32),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(u32, u32),
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: u32, n: usize },
    #[error("digraph has no vertices")]
    Empty,
    #[error("provenance has {got} entries for {arcs} arcs")]
    ProvenanceLength { got: usize, arcs: usize },
    #[error("provenance of arc {arc} names edge {edge}, whose endpoints do not match")]
    ProvenanceEndpoints { arc: usize, edge: u32 },
}

/// Where an arc of an auxiliary digraph came from: an edge of the source
/// graph and its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcSource {
    pub edge: u32,
    pub color: u32,
}

/// Mapping from an auxiliary digraph back to the colored graph it was built
/// from: dense digraph vertex ids to original vertex ids, and per-arc edge
/// provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub vertex_ids: Vec<u32>,
    pub arc_sources: Vec<ArcSource>,
}

/// Simple digraph: no loops, no duplicate arcs; `(u,v)` and `(v,u)` may
/// coexist. Arcs are stored sorted by `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(u32, u32)>,
    out: Vec<Vec<u32>>,
    into: Vec<Vec<u32>>,
    provenance: Option<Provenance>,
}

impl Digraph {
    pub fn new(n: usize, mut arcs: Vec<(u32, u32)>) -> Result<Self, DigraphError> {
        for &(u, v) in &arcs {
            if u == v {
                return Err(DigraphError::Loop(u));
            }
            if u as usize >= n {
                return Err(DigraphError::VertexOutOfRange { v: u, n });
            }
            if v as usize >= n {
                return Err(DigraphError::VertexOutOfRange { v, n });
            }
        }
        arcs.sort_unstable();
        for w in arcs.windows(2) {
            if w[0] == w[1] {
                return Err(DigraphError::DuplicateArc(w[0].0, w[0].1));
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut into = vec![Vec::new(); n];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            out[u as usize].push(i as u32);
            into[v as usize].push(i as u32);
        }
        Ok(Self {
            n,
            arcs,
            out,
            into,
            provenance: None,
        })
    }

    /// Attaches provenance, checking that every arc maps to an edge of `g`
    /// whose endpoints match the arc's endpoints under `vertex_ids`.
    pub fn attach_provenance(
        &mut self,
        g: &ColoredGraph,
        provenance: Provenance,
    ) -> Result<(), DigraphError> {
        if provenance.arc_sources.len() != self.arcs.len() {
            return Err(DigraphError::ProvenanceLength {
                got: provenance.arc_sources.len(),
                arcs: self.arcs.len(),
            });
        }
        if provenance.vertex_ids.len() != self.n {
            return Err(DigraphError::ProvenanceLength {
                got: provenance.vertex_ids.len(),
                arcs: self.n,
            });
        }
        for (i, (&(u, v), src)) in self.arcs.iter().zip(&provenance.arc_sources).enumerate() {
            let (a, b) = g.endpoints(src.edge as usize);
            let (ou, ov) = (
                provenance.vertex_ids[u as usize],
                provenance.vertex_ids[v as usize],
            );
            if (a, b) != (ou.min(ov), ou.max(ov)) || g.color(src.edge as usize) != src.color {
                return Err(DigraphError::ProvenanceEndpoints {
                    arc: i,
                    edge: src.edge,
                });
            }
        }
        self.provenance = Some(provenance);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn head(&self, arc: usize) -> u32 {
        self.arcs[arc].1
    }

    pub fn tail(&self, arc: usize) -> u32 {
        self.arcs[arc].0
    }

    /// Out-arc indices of `v`, heads ascending.
    pub fn out_arcs(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    /// In-arc indices of `v`.
    pub fn in_arcs(&self, v: u32) -> &[u32] {
        &self.into[v as usize]
    }

    pub fn out_degree(&self, v: u32) -> usize {
        self.out[v as usize].len()
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn arc_between(&self, u: u32, v: u32) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }
}

/// Minimum out-degree over all vertices. Errors on the empty digraph.
pub fn min_out_degree(d: &Digraph) -> Result<usize, DigraphError> {
    if d.vertex_count() == 0 {
        return Err(DigraphError::Empty);
    }
    Ok((0..d.vertex_count() as u32)
        .map(|v| d.out_degree(v))
        .min()
        .unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_triangle_min_out_degree() {
        let d = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(min_out_degree(&d).unwrap(), 1);
    }

    #[test]
    fn complete_digraph_on_four() {
        let mut arcs = Vec::new();
        for u in 0..4u32 {
            for v in 0..4u32 {
                if u != v {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::new(4, arcs).unwrap();
        assert_eq!(min_out_degree(&d).unwrap(), 3);
    }

    #[test]
    fn isolated_vertex_and_empty() {
        let d = Digraph::new(1, vec![]).unwrap();
        assert_eq!(min_out_degree(&d).unwrap(), 0);
        let e = Digraph::new(0, vec![]).unwrap();
        assert_eq!(min_out_degree(&e).unwrap_err(), DigraphError::Empty);
    }

    #[test]
    fn antiparallel_arcs_allowed_duplicates_not() {
        assert!(Digraph::new(2, vec![(0, 1), (1, 0)]).is_ok());
        assert_eq!(
            Digraph::new(2, vec![(0, 1), (0, 1)]).unwrap_err(),
            DigraphError::DuplicateArc(0, 1)
        );
        assert_eq!(
            Digraph::new(2, vec![(0, 0)]).unwrap_err(),
            DigraphError::Loop(0)
        );
    }

    #[test]
    fn provenance_endpoints_must_match() {
        let g = ColoredGraph::new(3, vec![(0, 1, 1), (1, 2, 2)]).unwrap();
        let mut d = Digraph::new(2, vec![(0, 1)]).unwrap();
        // Digraph vertex 0 is graph vertex 0, digraph vertex 1 is graph vertex 1.
        let ok = Provenance {
            vertex_ids: vec![0, 1],
            arc_sources: vec![ArcSource { edge: 0, color: 1 }],
        };
        d.clone().attach_provenance(&g, ok).unwrap();
        let bad = Provenance {
            vertex_ids: vec![0, 1],
            arc_sources: vec![ArcSource { edge: 1, color: 2 }],
        };
        assert!(d.attach_provenance(&g, bad).is_err());
    }
}
