//! Critical graphs: PoC strictly above that of every proper induced
//! subgraph. Strongly critical: strictly above every proper subgraph, where
//! a proper subgraph may lose vertices, edges, or both.
//!
//! Subgraphs that are disconnected are compared under the per-component
//! convention of the solver. Subgraphs without edges have no PoC and are
//! skipped.
//!
//! The PoC of a disconnected graph is a mediant of its components' values,
//! so it never exceeds the largest of them. Hence the largest PoC over all
//! induced subgraphs (or all subgraphs) of `g` is attained on a connected
//! one, and it satisfies a recursion over single vertex (or edge) deletions
//! that can be memoised per isomorphism class of connected graphs.

use std::collections::HashMap;

use parking_lot::Mutex;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::ratio::Ratio;
use crate::solver::Solver;

pub const CRITICAL_CAP: usize = 12;
pub const STRONGLY_CRITICAL_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("graph has no edge, so no PoC")]
    NoEdge,
    #[error("graph has no proper subgraph with an edge; criticality is vacuous")]
    Vacuous,
    #[error("{n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

fn check_preconditions(g: &Graph, cap: usize) -> Result<(), CriticalityError> {
    if g.m() == 0 {
        return Err(CriticalityError::NoEdge);
    }
    // With one edge and no other vertex every proper subgraph is edgeless.
    if g.n() == 2 {
        return Err(CriticalityError::Vacuous);
    }
    if g.n() > cap {
        return Err(CriticalityError::TooLarge { n: g.n(), cap });
    }
    Ok(())
}

/// Memoised criticality tests sharing one solver.
pub struct Criticality<'a> {
    solver: &'a Solver,
    induced: Mutex<HashMap<CanonicalForm, Ratio>>,
    spanning: Mutex<HashMap<CanonicalForm, Ratio>>,
}

impl<'a> Criticality<'a> {
    pub fn new(solver: &'a Solver) -> Criticality<'a> {
        Criticality {
            solver,
            induced: Mutex::new(HashMap::new()),
            spanning: Mutex::new(HashMap::new()),
        }
    }

    pub fn is_critical(&self, g: &Graph) -> Result<bool, CriticalityError> {
        self.is_critical_with_cap(g, CRITICAL_CAP)
    }

    pub fn is_critical_with_cap(&self, g: &Graph, cap: usize) -> Result<bool, CriticalityError> {
        check_preconditions(g, cap.min(crate::canon::CANON_MAX_VERTICES))?;
        let target = self.solver.poc(g).expect("graph has an edge");
        for v in 0..g.n() {
            let mut keep = g.vertices();
            keep.remove(v);
            if self.max_over_parts(g, &keep, false) >= Some(target.clone()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_strongly_critical(&self, g: &Graph) -> Result<bool, CriticalityError> {
        self.is_strongly_critical_with_cap(g, STRONGLY_CRITICAL_CAP)
    }

    /// Induced subgraphs are subgraphs, so a graph that is not critical is
    /// not strongly critical either; only critical graphs get the full
    /// edge-deletion search.
    pub fn is_strongly_critical_with_cap(
        &self,
        g: &Graph,
        cap: usize,
    ) -> Result<bool, CriticalityError> {
        check_preconditions(g, cap.min(crate::canon::CANON_MAX_VERTICES))?;
        if (0..g.n()).any(|v| g.degree(v) == 0) {
            // Removing the isolated vertex leaves the PoC unchanged.
            return Ok(false);
        }
        if !self.is_critical_with_cap(g, cap)? {
            return Ok(false);
        }
        let target = self.solver.poc(g).expect("graph has an edge");
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v);
            let keep = h.vertices();
            if self.max_over_parts(&h, &keep, true) >= Some(target.clone()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest PoC over induced subgraphs (`spanning == false`) or all
    /// subgraphs (`spanning == true`) of `g[keep]`; `None` without edges.
    fn max_over_parts(&self, g: &Graph, keep: &VertexSet, spanning: bool) -> Option<Ratio> {
        g.components_within(keep)
            .into_iter()
            .filter(|c| c.len() >= 2)
            .map(|c| {
                let (part, _) = g.induced_subgraph(&c).expect("non-empty");
                self.max_connected(&part, spanning)
            })
            .max()
    }

    fn max_connected(&self, g: &Graph, spanning: bool) -> Ratio {
        let memo = if spanning {
            &self.spanning
        } else {
            &self.induced
        };
        let key = canonical_form(g).expect("within the canonical-form cap");
        if let Some(r) = memo.lock().get(&key) {
            return r.clone();
        }
        let mut best = self
            .solver
            .poc(g)
            .expect("connected with at least two vertices");
        if spanning {
            for (u, v) in g.edges() {
                let h = g.without_edge(u, v);
                if let Some(r) = self.max_over_parts(&h, &h.vertices(), true) {
                    best = best.max(r);
                }
            }
        } else {
            for v in 0..g.n() {
                let mut keep = g.vertices();
                keep.remove(v);
                if let Some(r) = self.max_over_parts(g, &keep, false) {
                    best = best.max(r);
                }
            }
        }
        memo.lock().insert(key, best.clone());
        best
    }
}

pub fn is_critical(g: &Graph, solver: &Solver) -> Result<bool, CriticalityError> {
    Criticality::new(solver).is_critical(g)
}

pub fn is_critical_with_cap(
    g: &Graph,
    solver: &Solver,
    cap: usize,
) -> Result<bool, CriticalityError> {
    Criticality::new(solver).is_critical_with_cap(g, cap)
}

pub fn is_strongly_critical(g: &Graph, solver: &Solver) -> Result<bool, CriticalityError> {
    Criticality::new(solver).is_strongly_critical(g)
}

pub fn is_strongly_critical_with_cap(
    g: &Graph,
    solver: &Solver,
    cap: usize,
) -> Result<bool, CriticalityError> {
    Criticality::new(solver).is_strongly_critical_with_cap(g, cap)
}

/// A proper induced subgraph (by vertex set) whose PoC is at least that of
/// `g`, or `None` when `g` is critical. Tries every vertex subset, larger
/// ones first.
pub fn critical_counterexample(
    g: &Graph,
    solver: &Solver,
    cap: usize,
) -> Result<Option<VertexSet>, CriticalityError> {
    check_preconditions(g, cap.min(20))?;
    let target = solver.poc(g).expect("graph has an edge");
    let n = g.n();
    let mut masks: Vec<u32> = (1..(1u32 << n) - 1).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    for mask in masks {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if g.edge_count_within(&s) == 0 {
            continue;
        }
        let (h, _) = g.induced_subgraph(&s).expect("non-empty");
        if solver.poc(&h).expect("has an edge") >= target {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_paths() {
        let solver = Solver::new();
        let crit = Criticality::new(&solver);
        assert_eq!(crit.is_critical(&Graph::cycle(5)), Ok(true));
        assert_eq!(crit.is_critical(&Graph::path(5)), Ok(true));
        assert_eq!(crit.is_critical(&Graph::path(4)), Ok(false));
        assert_eq!(crit.is_critical(&Graph::path(6)), Ok(false));
        assert_eq!(crit.is_strongly_critical(&Graph::cycle(5)), Ok(false));
        assert_eq!(crit.is_strongly_critical(&Graph::path(5)), Ok(true));
        assert_eq!(crit.is_strongly_critical(&Graph::path(7)), Ok(true));
        assert_eq!(crit.is_critical(&Graph::complete(3)), Ok(false));
        assert_eq!(is_critical(&Graph::cycle(4), &solver), Ok(true));
        // Dropping an edge of C4 leaves P4, whose PoC is 1.
        assert_eq!(is_strongly_critical(&Graph::cycle(4), &solver), Ok(true));
    }

    #[test]
    fn preconditions() {
        let solver = Solver::new();
        assert_eq!(
            is_critical(&Graph::complete(2), &solver),
            Err(CriticalityError::Vacuous)
        );
        assert_eq!(
            is_critical(&Graph::edgeless(3).unwrap(), &solver),
            Err(CriticalityError::NoEdge)
        );
        assert_eq!(
            is_strongly_critical(&Graph::path(11), &solver),
            Err(CriticalityError::TooLarge { n: 11, cap: 10 })
        );
        let p5_plus = Graph::path(5)
            .disjoint_union(&Graph::edgeless(1).unwrap())
            .unwrap();
        assert_eq!(is_strongly_critical(&p5_plus, &solver), Ok(false));
        assert_eq!(is_critical(&p5_plus, &solver), Ok(false));
    }

    #[test]
    fn counterexample_is_reported() {
        let solver = Solver::new();
        let s = critical_counterexample(&Graph::path(6), &solver, CRITICAL_CAP)
            .unwrap()
            .expect("P6 is not critical");
        let (h, _) = Graph::path(6).induced_subgraph(&s).unwrap();
        assert!(solver.poc(&h).unwrap() >= solver.poc(&Graph::path(6)).unwrap());
        assert_eq!(
            critical_counterexample(&Graph::cycle(5), &solver, 12),
            Ok(None)
        );
    }
}
