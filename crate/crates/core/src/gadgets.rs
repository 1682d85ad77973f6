//! Constructions of the hardness reduction for PoC thresholds. Each one
//! returns the graph together with the closed-form `tau` / `tau_c` values
//! it is supposed to have; nothing here checks them against the solver.
//!
//! Labelling is deterministic: original vertices keep their labels and new
//! vertices are appended in the order documented on each function. Every
//! free choice (anchor vertex, join endpoints, attachment leaf) is the
//! smallest qualifying index.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::ratio::Ratio;
use crate::solver::{vertex_cover_number, Solver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("input graph must be connected")]
    Disconnected,
    #[error("input graph must have at least one edge")]
    NoEdge,
    #[error("anchor {anchor} is not a vertex of a {n}-vertex graph")]
    AnchorOutOfRange { anchor: usize, n: usize },
    #[error("number of copies must be positive")]
    NoCopies,
    #[error("{0} graph has no vertex adjacent to a degree-one vertex")]
    NoPendantNeighbour(&'static str),
    #[error("graph has no degree-one vertex")]
    NoLeaf,
    #[error("{0} has no closed-form tau_c prediction")]
    MissingTaucPrediction(String),
    #[error("ratio {r1}/{r2} must be in lowest terms with 1 < r < 2")]
    InvalidRatio { r1: u64, r2: u64 },
    #[error("need phi2 < phi1 < 2*phi2, got phi1 = {phi1}, phi2 = {phi2}")]
    InvalidPhi { phi1: u64, phi2: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A constructed graph with its predicted cover numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetOutput {
    #[serde(skip)]
    pub graph: Graph,
    pub predicted_tau: usize,
    /// `None` where no closed form is claimed (replication).
    pub predicted_tauc: Option<usize>,
    /// Construction name with its parameters, outermost last.
    pub provenance: String,
}

impl GadgetOutput {
    fn tauc_or_err(&self) -> Result<usize, GadgetError> {
        self.predicted_tauc
            .ok_or_else(|| GadgetError::MissingTaucPrediction(self.provenance.clone()))
    }
}

fn require_edge(g: &Graph) -> Result<(), GadgetError> {
    if g.m() == 0 {
        return Err(GadgetError::NoEdge);
    }
    Ok(())
}

/// Hangs a path `v - v' - v''` off every vertex. Labels: `v' = n + v`,
/// `v'' = 2n + v`. Predicts `tau = n + tau(g)` and `tau_c = 2n`.
pub fn fix_tauc(g: &Graph) -> Result<GadgetOutput, GadgetError> {
    require_edge(g)?;
    fix_tauc_with_tau(g, vertex_cover_number(g).value)
}

/// As [`fix_tauc`] with `tau(g)` supplied by the caller.
pub fn fix_tauc_with_tau(g: &Graph, tau: usize) -> Result<GadgetOutput, GadgetError> {
    require_edge(g)?;
    if !g.is_connected() {
        return Err(GadgetError::Disconnected);
    }
    let n = g.n();
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, n + v));
        edges.push((n + v, 2 * n + v));
    }
    Ok(GadgetOutput {
        graph: Graph::from_edges(3 * n, &edges)?,
        predicted_tau: n + tau,
        predicted_tauc: Some(2 * n),
        provenance: format!("fix_tauc(n={n}, m={})", g.m()),
    })
}

/// Replaces every edge `e = uv` by a vertex `e` with pendant `e'` and
/// edges to `u''`, `v''`; every vertex `v` gets neighbours `v'`, `v''`
/// and a shared hub `w` with pendant `w'`. The edges of `g` themselves are
/// not kept.
///
/// Labels: `v` as in `g`, `v' = n + v`, `v'' = 2n + v`, edge `i` (in
/// sorted edge order) is `3n + i` with pendant `3n + m + i`, then
/// `w = 3n + 2m` and `w' = 3n + 2m + 1`.
///
/// Predicts `tau = n + m + 1` and `tau_c = n + m + 1 + tau(g)`.
pub fn fix_tau(g: &Graph) -> Result<GadgetOutput, GadgetError> {
    require_edge(g)?;
    fix_tau_with_tau(g, vertex_cover_number(g).value)
}

/// As [`fix_tau`] with `tau(g)` supplied by the caller.
pub fn fix_tau_with_tau(g: &Graph, tau: usize) -> Result<GadgetOutput, GadgetError> {
    require_edge(g)?;
    let (n, m) = (g.n(), g.m());
    let hub = 3 * n + 2 * m;
    let mut edges = Vec::with_capacity(4 * n + 3 * m + 1);
    for v in 0..n {
        edges.push((v, n + v));
        edges.push((v, 2 * n + v));
        edges.push((v, hub));
    }
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        let e = 3 * n + i;
        edges.push((e, 3 * n + m + i));
        edges.push((e, 2 * n + u));
        edges.push((e, 2 * n + v));
    }
    edges.push((hub, hub + 1));
    Ok(GadgetOutput {
        graph: Graph::from_edges(hub + 2, &edges)?,
        predicted_tau: n + m + 1,
        predicted_tauc: Some(n + m + 1 + tau),
        provenance: format!("fix_tau(n={n}, m={m})"),
    })
}

/// Adds a hub `w = n` joined to the smallest vertex of every component,
/// and a pendant `w' = n + 1` on it. Applied even to connected graphs.
/// Raises `tau` by exactly one.
pub fn connectify(g: &Graph) -> Result<Graph, GadgetError> {
    let n = g.n();
    let mut edges = g.edges();
    for comp in g.connected_components() {
        edges.push((comp.first().expect("components are non-empty"), n));
    }
    edges.push((n, n + 1));
    Ok(Graph::from_edges(n + 2, &edges)?)
}

/// `k` disjoint copies of `g` (copy `i` uses labels `i*n..(i+1)*n`), every
/// copy of `anchor` joined to a hub `w = k*n` with pendant `w' = k*n + 1`.
/// Predicts `tau = k * tau(g) + 1`.
pub fn replicate_join(g: &Graph, k: usize, anchor: usize) -> Result<GadgetOutput, GadgetError> {
    replicate_join_with_tau(g, k, anchor, vertex_cover_number(g).value)
}

/// As [`replicate_join`] with `tau(g)` supplied by the caller.
pub fn replicate_join_with_tau(
    g: &Graph,
    k: usize,
    anchor: usize,
    tau: usize,
) -> Result<GadgetOutput, GadgetError> {
    let n = g.n();
    if anchor >= n {
        return Err(GadgetError::AnchorOutOfRange { anchor, n });
    }
    if k == 0 {
        return Err(GadgetError::NoCopies);
    }
    if !g.is_connected() {
        return Err(GadgetError::Disconnected);
    }
    let hub = k * n;
    let base = g.edges();
    let mut edges = Vec::with_capacity(k * (base.len() + 1) + 1);
    for copy in 0..k {
        let off = copy * n;
        edges.extend(base.iter().map(|&(u, v)| (off + u, off + v)));
        edges.push((off + anchor, hub));
    }
    edges.push((hub, hub + 1));
    Ok(GadgetOutput {
        graph: Graph::from_edges(hub + 2, &edges)?,
        predicted_tau: k * tau + 1,
        predicted_tauc: None,
        provenance: format!("replicate_join(n={n}, k={k}, anchor={anchor})"),
    })
}

fn pendant_neighbour(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.neighbors(v).iter().any(|u| g.degree(u) == 1))
}

/// Disjoint union (`b` shifted by `a.n()`) plus one edge between the
/// smallest vertex of each side that has a degree-one neighbour.
/// Predictions add up.
pub fn join_disjoint(a: &GadgetOutput, b: &GadgetOutput) -> Result<GadgetOutput, GadgetError> {
    let (ta, tb) = (a.tauc_or_err()?, b.tauc_or_err()?);
    let u = pendant_neighbour(&a.graph).ok_or(GadgetError::NoPendantNeighbour("first"))?;
    let v = pendant_neighbour(&b.graph).ok_or(GadgetError::NoPendantNeighbour("second"))?;
    let shift = a.graph.n();
    let mut edges = a.graph.edges();
    edges.extend(
        b.graph
            .edges()
            .into_iter()
            .map(|(x, y)| (x + shift, y + shift)),
    );
    edges.push((u, v + shift));
    Ok(GadgetOutput {
        graph: Graph::from_edges(shift + b.graph.n(), &edges)?,
        predicted_tau: a.predicted_tau + b.predicted_tau,
        predicted_tauc: Some(ta + tb),
        provenance: format!("join({}, {})", a.provenance, b.provenance),
    })
}

/// Non-negative `a`, `b` with `(a + 2b + phi1) = r1*c` and
/// `(a + b + phi2) = r2*c`, for the least such `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbSolution {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

fn check_ratio(r1: u64, r2: u64) -> Result<(), GadgetError> {
    if r2 == 0 || !(r2 < r1 && r1 < 2 * r2) || r1.gcd(&r2) != 1 {
        return Err(GadgetError::InvalidRatio { r1, r2 });
    }
    Ok(())
}

pub fn solve_ab(phi1: u64, phi2: u64, r1: u64, r2: u64) -> Result<AbSolution, GadgetError> {
    check_ratio(r1, r2)?;
    if !(phi2 < phi1 && phi1 < 2 * phi2) {
        return Err(GadgetError::InvalidPhi { phi1, phi2 });
    }
    // Solving the two equations for a and b:
    //   b = (r1 - r2) c - (phi1 - phi2)
    //   a = (2 r2 - r1) c - (2 phi2 - phi1)
    let (db, sb) = (r1 - r2, phi1 - phi2);
    let (da, sa) = (2 * r2 - r1, 2 * phi2 - phi1);
    let c = sb.div_ceil(db).max(sa.div_ceil(da));
    let sol = AbSolution {
        a: da * c - sa,
        b: db * c - sb,
        c,
    };
    debug_assert_eq!(sol.a + 2 * sol.b + phi1, r1 * c);
    debug_assert_eq!(sol.a + sol.b + phi2, r2 * c);
    Ok(sol)
}

/// Two caterpillars hung off the smallest degree-one vertex `v` of `u`.
/// The first is a path `u_1..u_a` with a pendant on every vertex, the
/// second a path `v_1..v_2b` with pendants on `v_2, v_4, ..., v_2b`; `v`
/// is joined to `u_1` and `v_1`.
///
/// Labels after the `N` vertices of `u`: `u_i = N + i - 1`, their pendants
/// `N + a + i - 1`, then `v_j = N + 2a + j - 1`, then the pendants of the
/// second path in order.
///
/// Predicts `tau += a + b` and `tau_c += a + 2b`. Those are the textbook
/// increments; see the tests for how the exact values can differ.
pub fn attach_caterpillars(
    u: &GadgetOutput,
    a: usize,
    b: usize,
) -> Result<GadgetOutput, GadgetError> {
    let tauc = u.tauc_or_err()?;
    let g = &u.graph;
    let v = (0..g.n())
        .find(|&x| g.degree(x) == 1)
        .ok_or(GadgetError::NoLeaf)?;
    let n0 = g.n();
    let mut edges = g.edges();
    let path1 = n0;
    let pend1 = n0 + a;
    for i in 0..a {
        edges.push((path1 + i, pend1 + i));
        if i > 0 {
            edges.push((path1 + i - 1, path1 + i));
        }
    }
    if a > 0 {
        edges.push((v, path1));
    }
    let path2 = n0 + 2 * a;
    let pend2 = path2 + 2 * b;
    for j in 0..2 * b {
        if j > 0 {
            edges.push((path2 + j - 1, path2 + j));
        }
        // Position j + 1 is even.
        if j % 2 == 1 {
            edges.push((path2 + j, pend2 + j / 2));
        }
    }
    if b > 0 {
        edges.push((v, path2));
    }
    Ok(GadgetOutput {
        graph: Graph::from_edges(pend2 + b, &edges)?,
        predicted_tau: u.predicted_tau + a + b,
        predicted_tauc: Some(tauc + a + 2 * b),
        provenance: format!("caterpillars({}, a={a}, b={b}, v={v})", u.provenance),
    })
}

/// Parameters and predictions of a full reduction instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionPlan {
    pub r1: u64,
    pub r2: u64,
    /// Whether both inputs went through [`connectify`] first.
    pub connectified: bool,
    pub tau_g: u64,
    pub tau_h: u64,
    pub n_g: u64,
    pub n_h: u64,
    pub m_h: u64,
    pub phi1: u64,
    pub phi2: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub predicted_tau: u64,
    pub predicted_tauc: u64,
    pub predicted_ratio: Ratio,
    /// `predicted_ratio <= r1/r2`; meant to agree with `tau_h <= tau_g`.
    pub decision: bool,
}

impl ReductionPlan {
    /// `phi1 - phi2 = r2 n_G + 2` and `2 phi2 - phi1 = r1 (n_H + m_H + 1) + 5`.
    pub fn phi_identities_hold(&self) -> bool {
        self.phi1 - self.phi2 == self.r2 * self.n_g + 2
            && 2 * self.phi2 - self.phi1 == self.r1 * (self.n_h + self.m_h + 1) + 5
    }

    pub fn equations_hold(&self) -> bool {
        self.a + 2 * self.b + self.phi1 == self.r1 * self.c
            && self.a + self.b + self.phi2 == self.r2 * self.c
    }

    pub fn ratio(&self) -> Ratio {
        Ratio::new(self.r1, self.r2).expect("r2 > 0")
    }
}

/// Everything built along the way, for compositional checking.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub plan: ReductionPlan,
    /// `G` and `H` replicated, then through their fixers, then joined,
    /// then with caterpillars: six stages in that order.
    pub stages: Vec<GadgetOutput>,
}

impl Reduction {
    pub fn graph(&self) -> &Graph {
        &self.stages.last().expect("six stages").graph
    }
}

/// Builds the reduction instance `U'` from `g` and `h` for `r = r1/r2`.
///
/// `tau(g)` and `tau(h)` come from the exact solver. If either input is
/// disconnected both are passed through [`connectify`], which shifts both
/// `tau` values by one and so leaves the comparison unchanged.
pub fn full_reduction(
    g: &Graph,
    h: &Graph,
    r1: u64,
    r2: u64,
    solver: &Solver,
) -> Result<Reduction, GadgetError> {
    check_ratio(r1, r2)?;
    require_edge(g)?;
    require_edge(h)?;
    let connectified = !g.is_connected() || !h.is_connected();
    let (g, h) = if connectified {
        (connectify(g)?, connectify(h)?)
    } else {
        (g.clone(), h.clone())
    };
    let tau_g = solver.numbers(&g).tau;
    let tau_h = solver.numbers(&h).tau;
    let (n_g, n_h, m_h) = (g.n() as u64, h.n() as u64, h.m() as u64);

    let g_rep = replicate_join_with_tau(&g, r2 as usize, 0, tau_g)?;
    let h_rep = replicate_join_with_tau(&h, r1 as usize, 0, tau_h)?;
    let g_fix = fix_tauc_with_tau(&g_rep.graph, g_rep.predicted_tau)?;
    let h_fix = fix_tau_with_tau(&h_rep.graph, h_rep.predicted_tau)?;
    let joined = join_disjoint(&g_fix, &h_fix)?;

    let phi1 = 2 * r2 * n_g + r1 * (n_h + m_h + 1) + 9;
    let phi2 = r2 * n_g + r1 * (n_h + m_h + 1) + 7;
    let AbSolution { a, b, c } = solve_ab(phi1, phi2, r1, r2)?;
    let last = attach_caterpillars(&joined, a as usize, b as usize)?;

    let predicted_tau = r2 * tau_g as u64 + a + b + phi2;
    let predicted_tauc = r1 * tau_h as u64 + a + 2 * b + phi1;
    let predicted_ratio = Ratio::new(predicted_tauc, predicted_tau).expect("positive");
    let plan = ReductionPlan {
        r1,
        r2,
        connectified,
        tau_g: tau_g as u64,
        tau_h: tau_h as u64,
        n_g,
        n_h,
        m_h,
        phi1,
        phi2,
        a,
        b,
        c,
        predicted_tau,
        predicted_tauc,
        decision: predicted_ratio <= Ratio::new(r1, r2).expect("r2 > 0"),
        predicted_ratio,
    };
    debug_assert!(plan.phi_identities_hold() && plan.equations_hold());
    Ok(Reduction {
        plan,
        stages: vec![g_rep, h_rep, g_fix, h_fix, joined, last],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::cover_numbers;

    fn solved(out: &GadgetOutput) -> (usize, usize) {
        let c = cover_numbers(&out.graph);
        (c.tau, c.tauc)
    }

    #[test]
    fn fix_tauc_examples() {
        for (g, tau, tauc) in [
            (Graph::path(3), 4, 6),
            (Graph::complete(2), 3, 4),
            (Graph::complete(3), 5, 6),
        ] {
            let out = fix_tauc(&g).unwrap();
            assert_eq!((out.predicted_tau, out.predicted_tauc), (tau, Some(tauc)));
            assert_eq!(solved(&out), (tau, tauc));
        }
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(fix_tauc(&two_k2), Err(GadgetError::Disconnected));
    }

    #[test]
    fn fix_tau_examples() {
        for (g, tau, tauc, n) in [
            (Graph::complete(2), 4, 5, 10),
            (Graph::path(3), 6, 7, 15),
            (Graph::cycle(4), 9, 11, 22),
        ] {
            let out = fix_tau(&g).unwrap();
            assert_eq!(out.graph.n(), n);
            assert_eq!((out.predicted_tau, out.predicted_tauc), (tau, Some(tauc)));
            assert_eq!(solved(&out), (tau, tauc));
        }
        assert_eq!(
            fix_tau(&Graph::edgeless(2).unwrap()),
            Err(GadgetError::NoEdge)
        );
    }

    #[test]
    fn connectify_examples() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let c = connectify(&two_k2).unwrap();
        assert_eq!(c.n(), 6);
        assert!(c.is_connected());
        assert_eq!(cover_numbers(&c).tau, 3);
        assert_eq!(cover_numbers(&connectify(&Graph::path(3)).unwrap()).tau, 2);
        let e = connectify(&Graph::edgeless(2).unwrap()).unwrap();
        assert_eq!((e.n(), cover_numbers(&e).tau), (4, 1));
    }

    #[test]
    fn replicate_examples() {
        for (g, k, anchor, n, tau) in [
            (Graph::complete(2), 2, 0, 6, 3),
            (Graph::complete(2), 3, 0, 8, 4),
            (Graph::path(3), 2, 1, 8, 3),
        ] {
            let out = replicate_join(&g, k, anchor).unwrap();
            assert_eq!(out.graph.n(), n);
            assert_eq!(out.predicted_tau, tau);
            assert_eq!(cover_numbers(&out.graph).tau, tau);
        }
        assert_eq!(
            replicate_join(&Graph::complete(2), 2, 5),
            Err(GadgetError::AnchorOutOfRange { anchor: 5, n: 2 })
        );
    }

    #[test]
    fn join_examples() {
        let a = fix_tauc(&Graph::complete(2)).unwrap();
        let b = fix_tau(&Graph::complete(2)).unwrap();
        let j = join_disjoint(&a, &b).unwrap();
        assert_eq!(j.graph.n(), 16);
        assert_eq!((j.predicted_tau, j.predicted_tauc), (7, Some(9)));
        assert_eq!(solved(&j), (7, 9));

        let a = fix_tauc(&Graph::path(3)).unwrap();
        let b = fix_tau(&Graph::path(3)).unwrap();
        let j = join_disjoint(&a, &b).unwrap();
        assert_eq!((j.predicted_tau, j.predicted_tauc), (10, Some(13)));
        assert_eq!(solved(&j), (10, 13));

        let r = replicate_join(&Graph::complete(2), 2, 0).unwrap();
        assert!(matches!(
            join_disjoint(&r, &a),
            Err(GadgetError::MissingTaucPrediction(_))
        ));
    }

    #[test]
    fn join_is_symmetric_up_to_isomorphism() {
        use crate::canon::canonical_form;
        let a = fix_tauc(&Graph::complete(2)).unwrap();
        let b = fix_tau(&Graph::complete(2)).unwrap();
        let ab = join_disjoint(&a, &b).unwrap();
        let ba = join_disjoint(&b, &a).unwrap();
        assert_eq!(canonical_form(&ab.graph), canonical_form(&ba.graph));
    }

    #[test]
    fn solve_ab_examples() {
        assert_eq!(solve_ab(20, 15, 3, 2), Ok(AbSolution { a: 0, b: 5, c: 10 }));
        assert_eq!(solve_ab(10, 9, 4, 3), Ok(AbSolution { a: 0, b: 3, c: 4 }));
        assert_eq!(solve_ab(15, 8, 3, 2), Ok(AbSolution { a: 6, b: 0, c: 7 }));
        assert_eq!(
            solve_ab(15, 8, 6, 4),
            Err(GadgetError::InvalidRatio { r1: 6, r2: 4 })
        );
        assert_eq!(
            solve_ab(16, 8, 3, 2),
            Err(GadgetError::InvalidPhi { phi1: 16, phi2: 8 })
        );
    }

    #[test]
    fn caterpillars_exact_values() {
        let base = fix_tauc(&Graph::complete(2)).unwrap();
        let same = attach_caterpillars(&base, 0, 0).unwrap();
        assert_eq!(same.graph, base.graph);
        assert_eq!(solved(&same), (3, 4));

        let two = attach_caterpillars(&base, 2, 0).unwrap();
        assert_eq!(two.graph.n(), 10);
        assert_eq!((two.predicted_tau, two.predicted_tauc), (5, Some(6)));
        // The attachment leaf becomes a cutvertex, so every connected cover
        // needs it as well: one more than the predicted increment.
        assert_eq!(solved(&two), (5, 7));

        let one = attach_caterpillars(&base, 0, 1).unwrap();
        assert_eq!((one.predicted_tau, one.predicted_tauc), (4, Some(6)));
        assert_eq!(solved(&one), (4, 7));
    }

    #[test]
    fn reduction_plans() {
        let solver = Solver::new();
        let k2 = Graph::complete(2);
        let k3 = Graph::complete(3);
        let r = full_reduction(&k2, &k2, 3, 2, &solver).unwrap();
        assert!(r.plan.phi_identities_hold() && r.plan.equations_hold());
        assert_eq!(r.plan.predicted_ratio, Ratio::new(3, 2).unwrap());
        assert!(r.plan.decision);
        assert_eq!(
            r.graph().n(),
            r.stages[4].graph.n() + 2 * r.plan.a as usize + 3 * r.plan.b as usize
        );
        assert!(
            !full_reduction(&k2, &k3, 3, 2, &solver)
                .unwrap()
                .plan
                .decision
        );
        assert!(
            full_reduction(&k3, &k2, 3, 2, &solver)
                .unwrap()
                .plan
                .decision
        );
    }
}
