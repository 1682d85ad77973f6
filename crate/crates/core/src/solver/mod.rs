//! Exact vertex cover number, connected vertex cover number and PoC.
//!
//! Disconnected graphs are handled per component: both numbers are summed
//! over the components that have at least one edge, and edgeless components
//! contribute nothing.

mod cvc;
mod vc;

use std::collections::HashMap;

use parking_lot::Mutex;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::ratio::Ratio;

/// Default vertex cap for [`all_minimum_vertex_covers`].
pub const ALL_COVERS_CAP: usize = 24;

/// Graphs up to this size are memoised under their canonical form.
pub const MEMO_CANON_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("PoC is undefined for a graph without edges")]
    UndefinedPoc,
    #[error("{n} vertices exceeds the cap of {cap} for this operation")]
    TooLarge { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    pub component: VertexSet,
    pub value: usize,
    pub witness: VertexSet,
}

/// `tau` or `tau_c` of a graph with a witness attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    /// One entry per component with at least one edge.
    pub per_component: Vec<ComponentSolution>,
}

/// `tau` and `tau_c` of the same graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverNumbers {
    pub tau: usize,
    pub tauc: usize,
}

impl CoverNumbers {
    pub fn poc(&self) -> Result<Ratio, SolveError> {
        if self.tau == 0 {
            return Err(SolveError::UndefinedPoc);
        }
        Ok(Ratio::new(self.tauc as u64, self.tau as u64).expect("tau > 0"))
    }
}

fn edged_components(g: &Graph) -> Vec<VertexSet> {
    g.connected_components()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect()
}

pub fn vertex_cover_number(g: &Graph) -> SolveResult {
    let mut witness = VertexSet::new();
    let mut per_component = Vec::new();
    for comp in edged_components(g) {
        let cover = vc::min_vertex_cover(g, &comp);
        witness.union_with(&cover);
        per_component.push(ComponentSolution {
            component: comp,
            value: cover.len(),
            witness: cover,
        });
    }
    SolveResult {
        value: witness.len(),
        witness,
        per_component,
    }
}

pub fn connected_vertex_cover_number(g: &Graph) -> SolveResult {
    let cuts = g.cutvertices();
    let mut witness = VertexSet::new();
    let mut per_component = Vec::new();
    for comp in edged_components(g) {
        let tau = vc::min_vertex_cover(g, &comp).len();
        let cover = cvc::min_connected_vertex_cover(g, &comp, &cuts, tau);
        witness.union_with(&cover);
        per_component.push(ComponentSolution {
            component: comp,
            value: cover.len(),
            witness: cover,
        });
    }
    SolveResult {
        value: witness.len(),
        witness,
        per_component,
    }
}

/// `tau` and `tau_c` in one pass, sharing the `tau` computation.
pub fn cover_numbers(g: &Graph) -> CoverNumbers {
    let cuts = g.cutvertices();
    let mut out = CoverNumbers { tau: 0, tauc: 0 };
    for comp in edged_components(g) {
        let tau = vc::min_vertex_cover(g, &comp).len();
        out.tau += tau;
        out.tauc += cvc::min_connected_vertex_cover(g, &comp, &cuts, tau).len();
    }
    out
}

pub fn poc(g: &Graph) -> Result<Ratio, SolveError> {
    cover_numbers(g).poc()
}

/// All minimum vertex covers, numerically sorted. Refuses graphs above
/// `cap` vertices because the list can be exponentially long.
pub fn all_minimum_vertex_covers(g: &Graph, cap: usize) -> Result<Vec<VertexSet>, SolveError> {
    if g.n() > cap {
        return Err(SolveError::TooLarge { n: g.n(), cap });
    }
    let tau = vertex_cover_number(g).value;
    Ok(vc::all_covers_of_size(g, tau))
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum MemoKey {
    Canonical(CanonicalForm),
    Labeled(Graph),
}

/// Memoising front end for `tau`/`tau_c` values. Connected components are
/// cached under their canonical form (up to [`MEMO_CANON_LIMIT`] vertices)
/// or their labelled adjacency beyond that. Safe to share between threads;
/// values never depend on the order of calls.
pub struct Solver {
    memo: Mutex<HashMap<MemoKey, CoverNumbers>>,
    canon_limit: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

impl Solver {
    pub fn new() -> Solver {
        Solver {
            memo: Mutex::new(HashMap::new()),
            canon_limit: MEMO_CANON_LIMIT,
        }
    }

    pub fn with_canon_limit(limit: usize) -> Solver {
        Solver {
            memo: Mutex::new(HashMap::new()),
            canon_limit: limit,
        }
    }

    pub fn cached(&self) -> usize {
        self.memo.lock().len()
    }

    pub fn numbers(&self, g: &Graph) -> CoverNumbers {
        let comps = edged_components(g);
        if comps.len() == 1 && comps[0].len() == g.n() {
            return self.connected_numbers(g);
        }
        let mut out = CoverNumbers { tau: 0, tauc: 0 };
        for comp in comps {
            let (h, _) = g.induced_subgraph(&comp).expect("non-empty component");
            let part = self.connected_numbers(&h);
            out.tau += part.tau;
            out.tauc += part.tauc;
        }
        out
    }

    pub fn poc(&self, g: &Graph) -> Result<Ratio, SolveError> {
        self.numbers(g).poc()
    }

    fn connected_numbers(&self, g: &Graph) -> CoverNumbers {
        if g.n() == 2 {
            return CoverNumbers { tau: 1, tauc: 1 };
        }
        let key = match (g.n() <= self.canon_limit)
            .then(|| canonical_form(g))
            .flatten()
        {
            Some(c) => MemoKey::Canonical(c),
            None => MemoKey::Labeled(g.clone()),
        };
        if let Some(&hit) = self.memo.lock().get(&key) {
            return hit;
        }
        let value = cover_numbers(g);
        self.memo.lock().insert(key, value);
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn small_values() {
        let p5 = Graph::path(5);
        let c5 = Graph::cycle(5);
        assert_eq!(vertex_cover_number(&p5).value, 2);
        assert_eq!(vertex_cover_number(&c5).value, 3);
        let e = Graph::edgeless(4).unwrap();
        let r = vertex_cover_number(&e);
        assert_eq!((r.value, r.witness.is_empty()), (0, true));
        let tc = connected_vertex_cover_number(&p5);
        assert_eq!(tc.value, 3);
        assert_eq!(tc.witness, set(&[1, 2, 3]));
        assert_eq!(connected_vertex_cover_number(&c5).value, 4);
        let two_k2 = Graph::complete(2)
            .disjoint_union(&Graph::complete(2))
            .unwrap();
        let r = connected_vertex_cover_number(&two_k2);
        assert_eq!(r.value, 2);
        assert_eq!(r.per_component.len(), 2);
    }

    #[test]
    fn poc_values() {
        assert_eq!(poc(&Graph::cycle(4)).unwrap(), Ratio::new(3, 2).unwrap());
        assert_eq!(poc(&Graph::path(7)).unwrap(), Ratio::new(5, 3).unwrap());
        let delta2 =
            Graph::from_edges(7, &[(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)])
                .unwrap();
        assert_eq!(cover_numbers(&delta2), CoverNumbers { tau: 3, tauc: 5 });
        assert_eq!(
            poc(&Graph::edgeless(3).unwrap()),
            Err(SolveError::UndefinedPoc)
        );
    }

    #[test]
    fn all_minimum_covers() {
        assert_eq!(
            all_minimum_vertex_covers(&Graph::complete(2), ALL_COVERS_CAP).unwrap(),
            vec![set(&[0]), set(&[1])]
        );
        assert_eq!(
            all_minimum_vertex_covers(&Graph::path(3), ALL_COVERS_CAP).unwrap(),
            vec![set(&[1])]
        );
        assert_eq!(
            all_minimum_vertex_covers(&Graph::cycle(4), ALL_COVERS_CAP).unwrap(),
            vec![set(&[0, 2]), set(&[1, 3])]
        );
        assert_eq!(
            all_minimum_vertex_covers(&Graph::path(30), ALL_COVERS_CAP),
            Err(SolveError::TooLarge { n: 30, cap: 24 })
        );
    }

    #[test]
    fn memo_agrees_with_direct() {
        let solver = Solver::new();
        let g = Graph::cycle(5).disjoint_union(&Graph::path(5)).unwrap();
        let direct = cover_numbers(&g);
        assert_eq!(solver.numbers(&g), direct);
        assert_eq!(solver.numbers(&g), direct);
        assert_eq!(direct, CoverNumbers { tau: 5, tauc: 7 });
        assert_eq!(solver.poc(&g).unwrap(), Ratio::new(7, 5).unwrap());
        assert_eq!(solver.cached(), 2);
    }
}
