//! Exhaustive checks of the PoC bounds and structure results over small
//! graphs, each producing a [`TheoremReport`].
//!
//! Every check comes in two forms: `check_*` enumerates its own graphs up
//! to a given order, and `*_on` runs over a caller-supplied list (for
//! instance graphs read from a graph6 file) with a caller-supplied solver,
//! so several sweeps can share one memo.

mod enumerate;

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::gadgets::{fix_tau, fix_tauc, join_disjoint, replicate_join, GadgetOutput};
use crate::graph::Graph;
use crate::io::emit_graph6;
use crate::ratio::Ratio;
use crate::recognize::{
    build_special_tree, first_contained, is_chordal, is_special_tree, Characterization,
    Criticality, PatternName,
};
use crate::solver::{
    all_minimum_vertex_covers, connected_vertex_cover_number, vertex_cover_number, Solver,
    ALL_COVERS_CAP,
};

pub use enumerate::{
    connected_chordal_graphs_up_to, connected_chordal_graphs_up_to_with_cap,
    connected_graphs_up_to, connected_graphs_up_to_with_cap, enumerate_connected,
    enumerate_connected_chordal, enumerate_connected_with_cap, graphs_up_to,
    CHORDAL_ENUMERATION_CAP, ENUMERATION_CAP, ENUMERATION_HARD_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("order {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graphs need at least one vertex")]
    NoVertices,
    #[error("threshold {threshold} does not go with forbidden set {forbidden}")]
    MismatchedCharacterization {
        threshold: String,
        forbidden: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    /// Graphs that met the premise of the check.
    pub scanned: usize,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u128,
    /// True iff `violations` is empty.
    pub passed: bool,
    /// Findings that are informative but not pass/fail.
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(theorem: &str) -> TheoremReport {
        TheoremReport {
            theorem: theorem.to_string(),
            scanned: 0,
            violations: Vec::new(),
            elapsed_ms: 0,
            passed: true,
            notes: Vec::new(),
        }
    }

    fn violation(&mut self, g: &Graph, detail: impl Into<String>) {
        self.violations.push(Violation {
            graph6: g6(g),
            detail: detail.into(),
        });
    }

    fn finish(mut self, started: Instant) -> TheoremReport {
        self.elapsed_ms = started.elapsed().as_millis();
        self.passed = self.violations.is_empty();
        self
    }

    /// Folds another report into this one under this report's name.
    pub fn absorb(&mut self, other: TheoremReport) {
        self.scanned += other.scanned;
        self.violations.extend(other.violations);
        self.elapsed_ms += other.elapsed_ms;
        self.notes.extend(other.notes);
        self.passed = self.violations.is_empty();
    }
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).expect("graphs here are small")
}

fn flatten(levels: Vec<Vec<Graph>>) -> Vec<Graph> {
    levels.into_iter().flatten().collect()
}

/// `tau_c <= 2 tau - 1` on every graph with an edge.
pub fn check_observation1(max_n: usize) -> Result<TheoremReport, VerifyError> {
    let graphs = flatten(connected_graphs_up_to(max_n)?);
    Ok(observation1_on(&graphs, &Solver::new()))
}

pub fn observation1_on(graphs: &[Graph], solver: &Solver) -> TheoremReport {
    let started = Instant::now();
    let mut report = TheoremReport::new("obs1");
    for g in graphs.iter().filter(|g| g.m() > 0) {
        report.scanned += 1;
        let c = solver.numbers(g);
        if c.tauc + 1 > 2 * c.tau {
            report.violation(g, format!("tau = {}, tau_c = {}", c.tau, c.tauc));
        }
    }
    report.finish(started)
}

fn theorem_id(c: Characterization) -> &'static str {
    match c {
        Characterization::PocPerfect => "thm2",
        Characterization::NearPerfect43 => "thm3",
        Characterization::NearPerfect32 => "thm4",
    }
}

fn names(set: &[PatternName]) -> String {
    let parts: Vec<String> = set.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Checks that graphs avoiding `forbidden` have PoC at most `threshold`
/// and that every forbidden pattern itself exceeds it. For the PoC-perfect
/// class it also checks that avoiding `{P5, C5, C4}` is the same as being
/// chordal and P5-free.
pub fn check_characterization(
    max_n: usize,
    threshold: &Ratio,
    forbidden: &[PatternName],
) -> Result<TheoremReport, VerifyError> {
    let class = matching_class(threshold, forbidden)?;
    let graphs = flatten(connected_graphs_up_to(max_n)?);
    Ok(characterization_on(&graphs, class, &Solver::new()))
}

pub fn matching_class(
    threshold: &Ratio,
    forbidden: &[PatternName],
) -> Result<Characterization, VerifyError> {
    Characterization::matching(threshold, forbidden).ok_or_else(|| {
        VerifyError::MismatchedCharacterization {
            threshold: threshold.to_string(),
            forbidden: names(forbidden),
        }
    })
}

pub fn characterization_on(
    graphs: &[Graph],
    class: Characterization,
    solver: &Solver,
) -> TheoremReport {
    let started = Instant::now();
    let threshold = class.threshold();
    let forbidden = class.forbidden();
    let mut report = TheoremReport::new(theorem_id(class));
    for g in graphs.iter().filter(|g| g.m() > 0) {
        let witness = first_contained(g, forbidden);
        if class == Characterization::PocPerfect {
            let alt = is_chordal(g) && first_contained(g, &[PatternName::P5]).is_none();
            if alt != witness.is_none() {
                report.violation(
                    g,
                    format!(
                        "{}-free is {}, chordal and P5-free is {alt}",
                        names(forbidden),
                        witness.is_none()
                    ),
                );
            }
        }
        if witness.is_some() {
            continue;
        }
        report.scanned += 1;
        let poc = solver.poc(g).expect("has an edge");
        if poc > threshold {
            report.violation(g, format!("PoC {poc} exceeds {threshold}"));
        }
    }
    for &p in forbidden {
        let poc = solver.poc(&p.graph()).expect("patterns have edges");
        report.notes.push(format!("{p} has PoC {poc}"));
        if poc <= threshold {
            report.violation(
                &p.graph(),
                format!("forbidden {p} has PoC {poc}, not above {threshold}"),
            );
        }
    }
    report.finish(started)
}

/// Chordal P7-free graphs have PoC at most 3/2.
pub fn check_corollary_chordal_p7free(max_n: usize) -> Result<TheoremReport, VerifyError> {
    let graphs = flatten(connected_graphs_up_to(max_n)?);
    Ok(corollary_chordal_p7free_on(&graphs, &Solver::new()))
}

pub fn corollary_chordal_p7free_on(graphs: &[Graph], solver: &Solver) -> TheoremReport {
    let started = Instant::now();
    let bound = Ratio::new(3, 2).expect("valid");
    let mut report = TheoremReport::new("cor1");
    for g in graphs.iter().filter(|g| g.m() > 0) {
        if !is_chordal(g) || first_contained(g, &[PatternName::P7]).is_some() {
            continue;
        }
        report.scanned += 1;
        let poc = solver.poc(g).expect("has an edge");
        if poc > bound {
            report.violation(g, format!("PoC {poc} exceeds 3/2"));
        }
    }
    report.finish(started)
}

/// Special trees with at most `max_n` vertices, by canonical form.
pub fn special_trees_up_to(max_n: usize) -> BTreeSet<CanonicalForm> {
    // A base with k vertices gives at least 2k + 1 vertices.
    let largest_base = max_n.saturating_sub(1) / 2;
    let mut out = BTreeSet::new();
    if largest_base < 2 {
        return out;
    }
    let bases = connected_graphs_up_to_with_cap(largest_base, ENUMERATION_HARD_CAP)
        .expect("bases are small");
    for base in bases.iter().flatten().filter(|b| b.m() > 0 && b.is_tree()) {
        let t = build_special_tree(base).expect("base is a tree with an edge");
        if t.n() <= max_n {
            out.insert(canonical_form(&t).expect("within canonical cap"));
        }
    }
    out
}

/// On connected chordal graphs: critical, strongly critical and special
/// tree coincide, and the positives have PoC `2 - 1/tau`. The one-edge
/// graph is skipped because criticality is vacuous for it.
pub fn check_critical_chordal(max_n: usize) -> Result<TheoremReport, VerifyError> {
    let graphs = flatten(connected_chordal_graphs_up_to_with_cap(
        max_n,
        CHORDAL_ENUMERATION_CAP,
    )?);
    Ok(critical_chordal_on(&graphs, max_n, &Solver::new()))
}

/// `max_n` fixes which special trees are expected among the positives.
pub fn critical_chordal_on(graphs: &[Graph], max_n: usize, solver: &Solver) -> TheoremReport {
    let started = Instant::now();
    let crit = Criticality::new(solver);
    let mut report = TheoremReport::new("thm5");
    let mut found = BTreeSet::new();
    for g in graphs.iter().filter(|g| g.n() >= 3 && g.m() > 0) {
        if !g.is_connected() || !is_chordal(g) {
            continue;
        }
        report.scanned += 1;
        let critical = crit
            .is_critical_with_cap(g, max_n.max(3))
            .expect("checked size");
        let strongly = crit
            .is_strongly_critical_with_cap(g, max_n.max(3))
            .expect("checked size");
        let special = is_special_tree(g);
        if critical != special || strongly != special {
            report.violation(
                g,
                format!(
                    "critical {critical}, strongly critical {strongly}, special tree {special}"
                ),
            );
        }
        if critical {
            let c = solver.numbers(g);
            let poc = c.poc().expect("has an edge");
            let expected = Ratio::two_minus_reciprocal(c.tau as u64);
            if poc != expected {
                report.violation(g, format!("critical with PoC {poc}, expected {expected}"));
            }
            found.insert(canonical_form(g).expect("within canonical cap"));
            report.notes.push(format!(
                "critical: {} ({} vertices, PoC {poc})",
                g6(g),
                g.n()
            ));
        }
    }
    let expected = special_trees_up_to(max_n);
    for c in expected.difference(&found) {
        report.violation(&c.to_graph(), "special tree not reported critical");
    }
    for c in found.difference(&expected) {
        report.violation(
            &c.to_graph(),
            "critical graph is not an expected special tree",
        );
    }
    report.finish(started)
}

/// Structure of strongly critical graphs: bipartite, every minimum vertex
/// cover independent, no minimum vertex cover holding both ends of a
/// bridge, and a special tree whenever there is a cutvertex. Also lists
/// every critical graph met, strongly critical or not.
pub fn check_strongly_critical_structure(max_n: usize) -> Result<TheoremReport, VerifyError> {
    let graphs = flatten(connected_graphs_up_to(max_n)?);
    Ok(strongly_critical_structure_on(&graphs, &Solver::new()))
}

pub fn strongly_critical_structure_on(graphs: &[Graph], solver: &Solver) -> TheoremReport {
    let started = Instant::now();
    let crit = Criticality::new(solver);
    let mut report = TheoremReport::new("thm6");
    for g in graphs.iter().filter(|g| g.n() >= 3 && g.m() > 0) {
        report.scanned += 1;
        let Ok(critical) = crit.is_critical(g) else {
            report
                .notes
                .push(format!("skipped {}: above size cap", g6(g)));
            continue;
        };
        if !critical {
            continue;
        }
        let Ok(strongly) = crit.is_strongly_critical(g) else {
            report
                .notes
                .push(format!("skipped {}: above size cap", g6(g)));
            continue;
        };
        let label = if strongly {
            "strongly critical"
        } else {
            "critical, not strongly critical"
        };
        report.notes.push(format!("{label}: {}", g6(g)));
        if !strongly {
            continue;
        }
        if !g.is_bipartite() {
            report.violation(g, "strongly critical but not bipartite");
        }
        let covers = all_minimum_vertex_covers(g, ALL_COVERS_CAP).expect("small graph");
        for c in &covers {
            if !g.is_independent(c) {
                report.violation(g, format!("minimum vertex cover {c} is not independent"));
            }
        }
        let (bridges, cuts) = g.bridges_and_cutvertices();
        for &(u, v) in &bridges {
            if let Some(c) = covers.iter().find(|c| c.contains(u) && c.contains(v)) {
                report.violation(
                    g,
                    format!("minimum vertex cover {c} holds both ends of bridge {u}-{v}"),
                );
            }
        }
        if !cuts.is_empty() && !is_special_tree(g) {
            report.violation(g, format!("cutvertices {cuts} but not a special tree"));
        }
    }
    report.finish(started)
}

/// Compares predicted and exact `tau` / `tau_c` for one gadget, also
/// re-checking the solver's witnesses.
fn compare(report: &mut TheoremReport, out: &GadgetOutput) {
    let g = &out.graph;
    let tau = vertex_cover_number(g);
    if !g.is_vertex_cover(&tau.witness) || tau.witness.len() != tau.value {
        report.violation(g, format!("{}: bad vertex cover witness", out.provenance));
    }
    if tau.value != out.predicted_tau {
        report.violation(
            g,
            format!(
                "{}: tau predicted {}, exact {}",
                out.provenance, out.predicted_tau, tau.value
            ),
        );
    }
    let Some(predicted) = out.predicted_tauc else {
        return;
    };
    let tauc = connected_vertex_cover_number(g);
    if !g.is_connected_vertex_cover(&tauc.witness) || tauc.witness.len() != tauc.value {
        report.violation(
            g,
            format!("{}: bad connected cover witness", out.provenance),
        );
    }
    if tauc.value != predicted {
        report.violation(
            g,
            format!(
                "{}: tau_c predicted {predicted}, exact {}",
                out.provenance, tauc.value
            ),
        );
    }
}

/// Closed-form predictions of the fixers (all connected graphs up to
/// `max_n`), of replication (`k` in 2 and 3, graphs up to 4 vertices) and
/// of joining (fixers applied to K2 and P3), against the exact solver.
pub fn verify_gadgets(max_n: usize) -> Result<TheoremReport, VerifyError> {
    let graphs = flatten(connected_graphs_up_to(max_n)?);
    Ok(gadgets_on(&graphs))
}

pub fn gadgets_on(graphs: &[Graph]) -> TheoremReport {
    let started = Instant::now();
    let mut report = TheoremReport::new("gadgets");
    for g in graphs.iter().filter(|g| g.m() > 0) {
        report.scanned += 1;
        if g.is_connected() {
            compare(&mut report, &fix_tauc(g).expect("connected with an edge"));
        }
        compare(&mut report, &fix_tau(g).expect("has an edge"));
        if g.n() <= 4 && g.is_connected() {
            for k in [2, 3] {
                compare(&mut report, &replicate_join(g, k, 0).expect("valid anchor"));
            }
        }
    }
    let bases = [Graph::complete(2), Graph::path(3)];
    let mut pieces = Vec::new();
    for b in &bases {
        pieces.push(fix_tauc(b).expect("connected"));
        pieces.push(fix_tau(b).expect("has an edge"));
    }
    for a in &pieces {
        for b in &pieces {
            compare(
                &mut report,
                &join_disjoint(a, b).expect("fixers leave pendants"),
            );
        }
    }
    report.finish(started)
}
