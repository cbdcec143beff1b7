//! The induction driver: validate, classify dominance, obtain a nice set
//! (or an early cycle, or a subinstance to recurse on), refine, build the
//! dense subgraph, and extract the short rainbow cycle.

use crate::graph::{validate, ColoredGraph};
use crate::params::PipelineParams;
use crate::witness::{self, CycleWitness};

use super::dominance::build_dominance;
use super::nice::{build_nice_set, NiceOutcome, SubInstance};
use super::refine::{build_dense_witness, refine_nice_set};
use super::trace::Trace;
use super::{gate, PipelineError};
use crate::girth::shortest_cycle_undirected;

#[derive(Debug, Clone)]
pub struct DriverOutcome {
    pub witness: CycleWitness,
    pub trace: Trace,
}

/// Finds a rainbow cycle of length at most `ceil(n/k)`.
///
/// Strict mode requires the size hypotheses to hold and asserts every
/// intermediate inequality; relaxed mode records and logs violations,
/// runs best-effort, and reports [`PipelineError::NotFound`] when no
/// qualifying cycle emerges. Either way a returned witness has been
/// verified by both checkers and respects the length bound.
pub fn find_short_rainbow_cycle(
    g: &ColoredGraph,
    p: &PipelineParams,
    budget: Option<u64>,
) -> Result<DriverOutcome, PipelineError> {
    let mut trace = Trace::default();
    let witness = run(g, p, budget, 0, &mut trace)?;
    Ok(DriverOutcome { witness, trace })
}

fn run(
    g: &ColoredGraph,
    p: &PipelineParams,
    budget: Option<u64>,
    depth: u32,
    trace: &mut Trace,
) -> Result<CycleWitness, PipelineError> {
    let n = g.vertex_count();
    let strict = p.strict_mode();

    let report = validate(g, p);
    let mut records = Vec::new();
    if strict && !report.overall {
        let mut reasons = Vec::new();
        if !report.simple {
            reasons.push("graph is not simple".to_string());
        }
        if !report.color_range_violations.is_empty() {
            reasons.push(format!(
                "{} edges with colors outside 1..=n",
                report.color_range_violations.len()
            ));
        }
        if !report.undersized_colors.is_empty() {
            reasons.push(format!(
                "{} color classes below 43 f(k) = {}",
                report.undersized_colors.len(),
                p.class_size_req
            ));
        }
        return Err(PipelineError::Hypotheses(reasons.join("; ")));
    }
    gate(
        strict,
        &mut records,
        "color classes >= 43 f(k)",
        report.overall,
        format!("{} undersized classes", report.undersized_colors.len()),
    )?;
    gate(
        strict,
        &mut records,
        "n > 43 f(k)",
        n as f64 > p.class_size_req || p.f_k == 0.0,
        format!("n = {n}, 43 f(k) = {}", p.class_size_req),
    )?;
    trace.push(
        depth,
        "validate",
        None,
        &[("n", n as i64), ("m", g.edge_count() as i64)],
        records,
    );

    let dom = build_dominance(g, p);
    trace.push(
        depth,
        "dominance",
        None,
        &[
            ("reps", dom.reps().len() as i64),
            ("vertex_dominating_colors", dom.vertex_dominating_count() as i64),
            ("dominant_pairs", dom.pair_count() as i64),
        ],
        Vec::new(),
    );

    let (outcome, records) = build_nice_set(g, p, &dom, budget)?;
    match outcome {
        NiceOutcome::EarlyCycle(w) => {
            trace.push(
                depth,
                "nice_set",
                Some("early_cycle"),
                &[("cycle_length", w.length as i64)],
                records,
            );
            finalize(g, p, w, depth, trace)
        }
        NiceOutcome::Recurse(sub) => {
            trace.push(
                depth,
                "nice_set",
                Some("recursion"),
                &[
                    ("sub_vertices", sub.vertices.len() as i64),
                    ("sub_colors", sub.colors.len() as i64),
                ],
                records,
            );
            let w = recurse(g, p, budget, depth, trace, &sub)?;
            finalize(g, p, w, depth, trace)
        }
        NiceOutcome::Nice { nice, steps, branch } => {
            trace.push(
                depth,
                "nice_set",
                Some(branch),
                &[
                    ("h", nice.size() as i64),
                    ("blocked", nice.blocked.len() as i64),
                    ("removals", steps.len() as i64),
                    ("reps", dom.reps().len() as i64),
                ],
                records,
            );
            let (refined, records) = refine_nice_set(g, p, &dom, &nice)?;
            trace.push(
                depth,
                "refine",
                None,
                &[
                    ("blocked", nice.blocked.len() as i64),
                    ("covered", refined.covered.len() as i64),
                    ("stable", refined.stable.len() as i64),
                ],
                records,
            );

            let dense = build_dense_witness(g, &refined.stable);
            let mut records = Vec::new();
            gate(
                strict,
                &mut records,
                "edge excess >= ceil(f(k))",
                dense.excess() >= p.excess_goal(),
                format!("excess {}, goal {}", dense.excess(), p.excess_goal()),
            )?;
            trace.push(
                depth,
                "dense_subgraph",
                None,
                &[
                    ("vertices", dense.vertex_set.len() as i64),
                    ("chosen_edges", dense.chosen.len() as i64),
                    ("excess", dense.excess()),
                ],
                records,
            );

            let view = dense.view(g);
            let Some(mut w) = shortest_cycle_undirected(&view) else {
                let mut records = Vec::new();
                gate(
                    strict,
                    &mut records,
                    "dense subgraph contains a cycle",
                    false,
                    "one-edge-per-color subgraph is acyclic".to_string(),
                )?;
                trace.push(depth, "final", None, &[], records);
                return Err(PipelineError::NotFound);
            };
            w.provenance = "dense_subgraph".to_string();
            finalize(g, p, w, depth, trace)
        }
    }
}

/// Builds the subinstance graph, re-checks its hypotheses, runs the driver
/// on it, and maps the witness back into the parent's ids and colors.
fn recurse(
    g: &ColoredGraph,
    p: &PipelineParams,
    budget: Option<u64>,
    depth: u32,
    trace: &mut Trace,
    sub: &SubInstance,
) -> Result<CycleWitness, PipelineError> {
    let strict = p.strict_mode();
    if sub.vertices.len() >= g.vertex_count() {
        return Err(PipelineError::Internal(
            "subinstance does not shrink the vertex set".into(),
        ));
    }
    let mut dense_vertex = vec![u32::MAX; g.vertex_count()];
    for (i, &v) in sub.vertices.iter().enumerate() {
        dense_vertex[v as usize] = i as u32;
    }
    let mut dense_color = vec![0u32; g.palette() as usize + 1];
    for (i, &c) in sub.colors.iter().enumerate() {
        dense_color[c as usize] = i as u32 + 1;
    }
    let classes = g.classes();
    let mut triples = Vec::new();
    for &c in &sub.colors {
        for &e in &classes[(c - 1) as usize] {
            let (a, b) = g.endpoints(e as usize);
            let (da, db) = (dense_vertex[a as usize], dense_vertex[b as usize]);
            if da == u32::MAX || db == u32::MAX {
                return Err(PipelineError::Internal(format!(
                    "edge {a}-{b} of confined color {c} leaves the subinstance"
                )));
            }
            triples.push((da, db, dense_color[c as usize]));
        }
    }
    let sub_n = sub.vertices.len();
    let sub_g = ColoredGraph::with_palette(sub_n, sub_n as u32, triples)
        .map_err(|e| PipelineError::Internal(format!("subinstance graph invalid: {e}")))?;

    let mut records = Vec::new();
    let sub_report = validate(&sub_g, p);
    gate(
        strict,
        &mut records,
        "subinstance satisfies the size hypotheses",
        sub_report.overall,
        format!(
            "{} undersized classes of {}",
            sub_report.undersized_colors.len(),
            sub_n
        ),
    )?;
    trace.push(
        depth,
        "recurse",
        None,
        &[("n", sub_n as i64), ("m", sub_g.edge_count() as i64)],
        records,
    );

    let inner = run(&sub_g, p, budget, depth + 1, trace)?;
    let vertices: Vec<u32> = inner
        .vertices
        .iter()
        .map(|&v| sub.vertices[v as usize])
        .collect();
    let colors: Vec<u32> = inner
        .colors
        .iter()
        .map(|&c| sub.colors[(c - 1) as usize])
        .collect();
    Ok(CycleWitness::undirected(
        vertices,
        colors,
        format!("sub:{}", inner.provenance),
    ))
}

/// Verifies a candidate witness with both checkers and enforces the length
/// bound, then records the final step.
fn finalize(
    g: &ColoredGraph,
    p: &PipelineParams,
    w: CycleWitness,
    depth: u32,
    trace: &mut Trace,
) -> Result<CycleWitness, PipelineError> {
    let strict = p.strict_mode();
    let target = p.cycle_target(g.vertex_count());
    witness::verify_in_graph(g, &w)?;
    witness::reverify_walk(g, &w)?;
    if !w.rainbow {
        return Err(PipelineError::Internal(
            "pipeline produced a non-rainbow cycle".into(),
        ));
    }
    let mut records = Vec::new();
    records.push(super::AssertionRecord {
        name: "witness verified by independent re-checker".into(),
        ok: true,
        detail: String::new(),
    });
    let ok_len = w.length <= target;
    gate(
        strict,
        &mut records,
        "cycle length <= ceil(n/k)",
        ok_len,
        format!("length {}, ceil(n/k) = {target}", w.length),
    )?;
    trace.push(
        depth,
        "final",
        Some(&w.provenance.clone()),
        &[("length", w.length as i64), ("target", target as i64)],
        records,
    );
    if !ok_len {
        return Err(PipelineError::NotFound);
    }
    Ok(w)
}
