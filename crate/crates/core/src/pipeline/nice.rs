//! Nice sets: recognition, shrinking to the target size, and the three-way
//! construction that either produces one, returns an early rainbow cycle,
//! or hands a strictly smaller subinstance back to the driver.

use std::collections::BTreeSet;
use std::fmt;

use crate::digraph::{min_out_degree, ArcSource, Digraph, Provenance};
use crate::girth::shortest_directed_cycle;
use crate::graph::ColoredGraph;
use crate::params::{meets, PipelineParams};
use crate::rainbow::{half_bound_rainbow_cycle, CaseSearchError};
use crate::witness::CycleWitness;

use super::dominance::DominanceTable;
use super::trace::AssertionRecord;
use super::{gate, PipelineError};

/// Full niceness recheck per removal step is O(m); past this edge count the
/// shrink loop relies on its incremental counters plus one full recheck at
/// the end.
const FULL_RECHECK_EDGE_LIMIT: usize = 20_000;

/// A vertex set `H` together with its blocked colors: the
/// non-vertex-dominating colors with at least one edge, all of whose edges
/// have an end in `H`.
///
/// `H` is nice when every vertex-dominating color has a dominant vertex
/// outside `H` and the blocked colors number at most `|H|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceSet {
    pub h: BTreeSet<u32>,
    pub blocked: BTreeSet<u32>,
}

impl NiceSet {
    pub fn size(&self) -> usize {
        self.h.len()
    }
}

/// Report of a niceness violation: which vertex-dominating colors lost all
/// their dominant vertices to `H`, and/or by how much the blocked colors
/// exceed `|H|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceViolation {
    pub confined_dominating_colors: Vec<u32>,
    pub blocked_excess: Option<(usize, usize)>,
    pub blocked: BTreeSet<u32>,
}

impl fmt::Display for NiceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.confined_dominating_colors.is_empty() {
            write!(
                f,
                "colors {:?} have no dominant vertex outside H",
                self.confined_dominating_colors
            )?;
        }
        if let Some((blocked, h)) = self.blocked_excess {
            write!(f, "{blocked} blocked colors exceed |H| = {h}")?;
        }
        Ok(())
    }
}

/// Computes the blocked colors of `h`: nonempty, not vertex-dominating, and
/// no edge with both ends outside `h`.
pub fn blocked_colors(g: &ColoredGraph, dom: &DominanceTable, h: &BTreeSet<u32>) -> BTreeSet<u32> {
    let palette = g.palette() as usize;
    let mut has_outside = vec![false; palette + 1];
    let mut nonempty = vec![false; palette + 1];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let c = g.color(i) as usize;
        nonempty[c] = true;
        if !h.contains(&a) && !h.contains(&b) {
            has_outside[c] = true;
        }
    }
    (1..=palette as u32)
        .filter(|&c| nonempty[c as usize] && !has_outside[c as usize] && !dom.is_vertex_dominating(c))
        .collect()
}

/// Checks the two niceness conditions for `h` and returns the [`NiceSet`]
/// with its computed blocked colors, or a violation report.
pub fn is_nice(
    g: &ColoredGraph,
    dom: &DominanceTable,
    h: &BTreeSet<u32>,
) -> Result<NiceSet, NiceViolation> {
    let blocked = blocked_colors(g, dom, h);
    let mut confined = Vec::new();
    for c in dom.vertex_dominating_colors() {
        let vs = dom.dominant_vertices(c).unwrap();
        if vs.iter().all(|v| h.contains(v)) {
            confined.push(c);
        }
    }
    let blocked_excess = if blocked.len() > h.len() {
        Some((blocked.len(), h.len()))
    } else {
        None
    };
    if confined.is_empty() && blocked_excess.is_none() {
        Ok(NiceSet {
            h: h.clone(),
            blocked,
        })
    } else {
        Err(NiceViolation {
            confined_dominating_colors: confined,
            blocked_excess,
            blocked,
        })
    }
}

/// How a vertex was chosen for removal during shrinking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalRule {
    /// Fewer blocked colors than vertices: any vertex keeps the set nice;
    /// the lowest id goes.
    AnyVertex,
    /// Blocked count equals |H|: the removed vertex is the H-side end of an
    /// edge of a blocked color whose other end is outside.
    CrossingEndpoint { color: u32, edge: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShrinkStep {
    pub removed: u32,
    pub rule: RemovalRule,
    pub h_size_after: usize,
    pub blocked_after: usize,
}

/// A strictly smaller instance for the induction: the vertices of the
/// current set and the blocked colors whose edges all lie inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubInstance {
    pub vertices: Vec<u32>,
    pub colors: Vec<u32>,
}

#[derive(Debug, Clone)]
pub enum ShrinkOutcome {
    Shrunk {
        nice: NiceSet,
        steps: Vec<ShrinkStep>,
    },
    Recurse(SubInstance),
}

/// Removes vertices from a nice set one at a time, keeping it nice, until
/// it has exactly `ceil(6*f(k))` vertices.
///
/// When the blocked colors number strictly less than `|H|`, any removal
/// works. When they are equal, the removed vertex must be the H-side end of
/// some blocked color's crossing edge; if no blocked color has a crossing
/// edge, all their edges lie inside `H` and the caller must recurse on that
/// subinstance instead.
pub fn shrink_nice_set(
    g: &ColoredGraph,
    p: &PipelineParams,
    dom: &DominanceTable,
    start: &NiceSet,
) -> Result<ShrinkOutcome, PipelineError> {
    let target = p.nice_target();
    let n = g.vertex_count();
    if start.size() < target {
        return Err(PipelineError::Precondition(format!(
            "shrink needs |H| >= ceil(6 f(k)) = {target}, got {}",
            start.size()
        )));
    }
    if start.size() >= n && target < n {
        return Err(PipelineError::Precondition(format!(
            "shrink needs |H| < n = {n}, got {}",
            start.size()
        )));
    }
    let entry = is_nice(g, dom, &start.h)
        .map_err(|v| PipelineError::Precondition(format!("start set is not nice: {v}")))?;

    let mut h = entry.h;
    let mut in_h = vec![false; n];
    for &v in &h {
        in_h[v as usize] = true;
    }

    // Incremental state: per color, how many edges lie fully outside H.
    let palette = g.palette() as usize;
    let mut outside_cnt = vec![0u32; palette + 1];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if !in_h[a as usize] && !in_h[b as usize] {
            outside_cnt[g.color(i) as usize] += 1;
        }
    }
    let mut blocked: BTreeSet<u32> = entry.blocked;
    let classes = g.classes();
    let mut steps = Vec::with_capacity(h.len() - target);

    while h.len() > target {
        let rule = if blocked.len() < h.len() {
            let v = *h.first().expect("nonempty above target");
            (v, RemovalRule::AnyVertex)
        } else if blocked.len() == h.len() {
            // Lowest H-side endpoint over all crossing edges of blocked
            // colors; record the first (color, edge) that attains it.
            let mut best: Option<(u32, u32, u32)> = None; // (v, color, edge)
            for &c in &blocked {
                for &e in &classes[(c - 1) as usize] {
                    let (a, b) = g.endpoints(e as usize);
                    let side = match (in_h[a as usize], in_h[b as usize]) {
                        (true, false) => Some(a),
                        (false, true) => Some(b),
                        _ => None,
                    };
                    if let Some(v) = side {
                        if best.is_none_or(|(bv, _, _)| v < bv) {
                            best = Some((v, c, e));
                        }
                    }
                }
            }
            match best {
                Some((v, c, e)) => (v, RemovalRule::CrossingEndpoint { color: c, edge: e }),
                None => {
                    // Every blocked color lives entirely inside H.
                    return Ok(ShrinkOutcome::Recurse(SubInstance {
                        vertices: h.iter().copied().collect(),
                        colors: blocked.iter().copied().collect(),
                    }));
                }
            }
        } else {
            return Err(PipelineError::Internal(format!(
                "blocked colors ({}) exceed |H| ({}) inside shrink",
                blocked.len(),
                h.len()
            )));
        };

        let (v, rule) = rule;
        h.remove(&v);
        in_h[v as usize] = false;
        for &e in g.incident(v) {
            let u = g.other_end(e as usize, v);
            if !in_h[u as usize] {
                let c = g.color(e as usize) as usize;
                outside_cnt[c] += 1;
                if outside_cnt[c] == 1 {
                    blocked.remove(&(c as u32));
                }
            }
        }
        steps.push(ShrinkStep {
            removed: v,
            rule,
            h_size_after: h.len(),
            blocked_after: blocked.len(),
        });

        if blocked.len() > h.len() {
            return Err(PipelineError::Internal(format!(
                "removal of {v} broke niceness: {} blocked > |H| = {}",
                blocked.len(),
                h.len()
            )));
        }
        if g.edge_count() <= FULL_RECHECK_EDGE_LIMIT {
            let check = is_nice(g, dom, &h).map_err(|viol| {
                PipelineError::Internal(format!("intermediate set not nice after removing {v}: {viol}"))
            })?;
            if check.blocked != blocked {
                return Err(PipelineError::Internal(
                    "incremental blocked set disagrees with full recomputation".into(),
                ));
            }
        }
    }

    let fin = is_nice(g, dom, &h)
        .map_err(|v| PipelineError::Internal(format!("final shrunken set not nice: {v}")))?;
    if fin.blocked != blocked {
        return Err(PipelineError::Internal(
            "final blocked set disagrees with incremental state".into(),
        ));
    }
    Ok(ShrinkOutcome::Shrunk { nice: fin, steps })
}

/// Auxiliary digraph on the representative set: vertices are the chosen
/// representatives, with an arc `rep(i) -> u` for every edge `{rep(i), u}`
/// of color `i` whose other end is also a representative. Arc provenance
/// points back at the source edge and its color.
pub fn build_aux_digraph(
    g: &ColoredGraph,
    p: &PipelineParams,
    dom: &DominanceTable,
    check_degree: bool,
) -> Result<(Digraph, Vec<AssertionRecord>), PipelineError> {
    let reps = dom.reps();
    if reps.is_empty() {
        return Err(PipelineError::Precondition(
            "representative set is empty".into(),
        ));
    }
    let n = g.vertex_count();
    let mut dense = vec![u32::MAX; n];
    for (i, &v) in reps.iter().enumerate() {
        dense[v as usize] = i as u32;
    }
    let mut arcs: Vec<((u32, u32), ArcSource)> = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let c = g.color(e);
        let Some(r) = dom.representative(c) else {
            continue;
        };
        let (tail, head) = if r == a {
            (a, b)
        } else if r == b {
            (b, a)
        } else {
            continue;
        };
        if dense[head as usize] == u32::MAX {
            continue;
        }
        arcs.push((
            (dense[tail as usize], dense[head as usize]),
            ArcSource { edge: e as u32, color: c },
        ));
    }
    arcs.sort_unstable_by_key(|&(arc, _)| arc);
    let arc_pairs: Vec<(u32, u32)> = arcs.iter().map(|&(a, _)| a).collect();
    let sources: Vec<ArcSource> = arcs.iter().map(|&(_, s)| s).collect();
    let mut d = Digraph::new(reps.len(), arc_pairs)
        .map_err(|e| PipelineError::Internal(format!("representative digraph invalid: {e}")))?;
    d.attach_provenance(
        g,
        Provenance {
            vertex_ids: reps.to_vec(),
            arc_sources: sources,
        },
    )
    .map_err(|e| PipelineError::Internal(format!("provenance mismatch: {e}")))?;

    let mut records = Vec::new();
    if check_degree {
        let mind = min_out_degree(&d)
            .map_err(|e| PipelineError::Internal(format!("degree check: {e}")))?;
        gate(
            p.strict_mode(),
            &mut records,
            "min out-degree of representative digraph >= f(k)",
            meets(mind, p.f_k),
            format!("min out-degree {mind}, f(k) = {}", p.f_k),
        )?;
    }
    Ok((d, records))
}

#[derive(Debug, Clone)]
pub enum NiceOutcome {
    /// A nice set of the target size, with the removal steps that shrank it.
    Nice {
        nice: NiceSet,
        steps: Vec<ShrinkStep>,
        branch: &'static str,
    },
    /// A rainbow cycle within `ceil(n/k)` found before a nice set was needed.
    EarlyCycle(CycleWitness),
    /// Blocked colors confined to the current set: recurse on them.
    Recurse(SubInstance),
}

/// Produces a nice set of size `ceil(6*f(k))` or short-circuits with a
/// rainbow cycle, by cases on `H = V \ S`:
///
/// (a) `ceil(6 f(k)) <= |H| < n`: shrink `H` directly.
/// (b) `|H| = n` (no color dominates a vertex): a rainbow cycle of length at
///     most `ceil(n/2) + 1` exists; return it if it is already within
///     `ceil(n/k)`, otherwise remove its vertices and shrink the remainder.
/// (c) `|H| < ceil(6 f(k))`: the representatives are dense enough that the
///     representative digraph has min out-degree `f(k)`; its shortest
///     directed cycle maps to a rainbow cycle in the host.
pub fn build_nice_set(
    g: &ColoredGraph,
    p: &PipelineParams,
    dom: &DominanceTable,
    budget: Option<u64>,
) -> Result<(NiceOutcome, Vec<AssertionRecord>), PipelineError> {
    let n = g.vertex_count();
    let target = p.nice_target();
    let strict = p.strict_mode();
    let mut records = Vec::new();

    let s: BTreeSet<u32> = dom.reps().iter().copied().collect();
    let h: BTreeSet<u32> = (0..n as u32).filter(|v| !s.contains(v)).collect();

    if h.len() == n {
        // Branch (b): no vertex-dominating colors.
        let cycle = match half_bound_rainbow_cycle(g, budget) {
            Ok(w) => w,
            Err(CaseSearchError::Budget(b)) => return Err(b.into()),
            Err(e) if strict => return Err(e.into()),
            Err(e) => {
                log::warn!("relaxed mode: bounded rainbow search failed: {e}");
                return Err(PipelineError::NotFound);
            }
        };
        if cycle.length <= p.cycle_target(n) {
            return Ok((NiceOutcome::EarlyCycle(cycle), records));
        }
        let on_cycle: BTreeSet<u32> = cycle.vertices.iter().copied().collect();
        let remainder: BTreeSet<u32> = (0..n as u32).filter(|v| !on_cycle.contains(v)).collect();
        let nice = is_nice(g, dom, &remainder).map_err(|v| {
            PipelineError::Internal(format!("cycle remainder is not nice: {v}"))
        })?;
        gate(
            strict,
            &mut records,
            "n/2 - 1 >= 6 f(k)",
            nice.size() >= target,
            format!("remainder size {} vs target {target}", nice.size()),
        )?;
        if nice.size() >= target {
            match shrink_nice_set(g, p, dom, &nice)? {
                ShrinkOutcome::Shrunk { nice, steps } => Ok((
                    NiceOutcome::Nice {
                        nice,
                        steps,
                        branch: "half_bound_remainder",
                    },
                    records,
                )),
                ShrinkOutcome::Recurse(sub) => Ok((NiceOutcome::Recurse(sub), records)),
            }
        } else {
            // Relaxed-only: carry the undersized remainder forward.
            Ok((
                NiceOutcome::Nice {
                    nice,
                    steps: Vec::new(),
                    branch: "half_bound_remainder",
                },
                records,
            ))
        }
    } else if h.len() >= target {
        // Branch (a).
        let nice = is_nice(g, dom, &h).map_err(|v| {
            PipelineError::Internal(format!("complement of representatives not nice: {v}"))
        })?;
        match shrink_nice_set(g, p, dom, &nice)? {
            ShrinkOutcome::Shrunk { nice, steps } => Ok((
                NiceOutcome::Nice {
                    nice,
                    steps,
                    branch: "shrink",
                },
                records,
            )),
            ShrinkOutcome::Recurse(sub) => Ok((NiceOutcome::Recurse(sub), records)),
        }
    } else {
        // Branch (c): representatives cover almost everything.
        let (aux, mut recs) = build_aux_digraph(g, p, dom, true)?;
        records.append(&mut recs);
        let Some(cycle) = shortest_directed_cycle(&aux) else {
            let detail = "representative digraph is acyclic".to_string();
            gate(strict, &mut records, "representative digraph has a directed cycle", false, detail)?;
            return Err(PipelineError::NotFound);
        };
        let prov = aux.provenance().expect("aux digraph carries provenance");
        let vertices: Vec<u32> = cycle
            .vertices
            .iter()
            .map(|&dv| prov.vertex_ids[dv as usize])
            .collect();
        let witness = CycleWitness::undirected(vertices, cycle.colors.clone(), "aux_digraph");
        if !witness.rainbow {
            return Err(PipelineError::Internal(
                "representative-cycle colors are not pairwise distinct".into(),
            ));
        }
        let ok_len = witness.length <= p.cycle_target(n);
        gate(
            strict,
            &mut records,
            "ceil(n/f(k)) + 73 <= ceil(n/k)",
            ok_len,
            format!(
                "cycle length {} vs ceil(n/k) = {}",
                witness.length,
                p.cycle_target(n)
            ),
        )?;
        if !ok_len {
            return Err(PipelineError::NotFound);
        }
        Ok((NiceOutcome::EarlyCycle(witness), records))
    }
}
