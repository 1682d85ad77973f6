//! Small graphs up to isomorphism by vertex augmentation.
//!
//! Every connected graph on `n` vertices arises from a connected graph on
//! `n - 1` vertices by adding a vertex with at least one neighbour (delete
//! any non-cutvertex to go back). Chordal graphs likewise arise by adding a
//! simplicial vertex, i.e. one whose neighbourhood is a clique, because a
//! simplicial vertex is never a cutvertex. Duplicates are removed by
//! canonical form and each level is sorted by canonical code.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

use super::VerifyError;

/// Default largest order for enumerations of all connected graphs.
pub const ENUMERATION_CAP: usize = 8;
/// Default largest order for connected chordal graphs.
pub const CHORDAL_ENUMERATION_CAP: usize = 9;
/// No enumeration goes beyond this order.
pub const ENUMERATION_HARD_CAP: usize = 10;

fn check_cap(n: usize, cap: usize) -> Result<(), VerifyError> {
    let cap = cap.min(ENUMERATION_HARD_CAP);
    if n > cap {
        return Err(VerifyError::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(VerifyError::NoVertices);
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq)]
enum Growth {
    Any,
    Connected,
    Chordal,
}

fn grow(level: &[Graph], growth: Growth) -> Vec<Graph> {
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    for g in level {
        let n = g.n();
        let mut edges = g.edges();
        let base = edges.len();
        let first = u32::from(growth != Growth::Any);
        for mask in first..(1 << n) {
            let nbrs: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if growth == Growth::Chordal
                && g.edge_count_within(&nbrs) != nbrs.len() * (nbrs.len() - 1) / 2
            {
                continue;
            }
            edges.truncate(base);
            edges.extend(nbrs.iter().map(|v| (v, n)));
            let h = Graph::from_edges(n + 1, &edges).expect("within range");
            seen.insert(canonical_form(&h).expect("within canonical cap"));
        }
    }
    seen.into_iter().map(|c| c.to_graph()).collect()
}

fn levels(max_n: usize, cap: usize, growth: Growth) -> Result<Vec<Vec<Graph>>, VerifyError> {
    check_cap(max_n, cap)?;
    let mut out = vec![vec![Graph::edgeless(1).expect("one vertex")]];
    while out.len() < max_n {
        let next = grow(out.last().expect("non-empty"), growth);
        out.push(next);
    }
    Ok(out)
}

/// All connected graphs on `1..=max_n` vertices, one per isomorphism
/// class; entry `i` holds the graphs on `i + 1` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>, VerifyError> {
    connected_graphs_up_to_with_cap(max_n, ENUMERATION_CAP)
}

pub fn connected_graphs_up_to_with_cap(
    max_n: usize,
    cap: usize,
) -> Result<Vec<Vec<Graph>>, VerifyError> {
    levels(max_n, cap, Growth::Connected)
}

pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, VerifyError> {
    enumerate_connected_with_cap(n, ENUMERATION_CAP)
}

pub fn enumerate_connected_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>, VerifyError> {
    Ok(levels(n, cap, Growth::Connected)?.pop().expect("n >= 1"))
}

/// All graphs, connected or not, on `1..=max_n` vertices up to
/// isomorphism, as [`connected_graphs_up_to`]. Every graph arises by adding
/// a vertex with an arbitrary (possibly empty) neighbourhood.
pub fn graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>, VerifyError> {
    levels(max_n, ENUMERATION_CAP, Growth::Any)
}

/// Connected chordal graphs on `1..=max_n` vertices, as
/// [`connected_graphs_up_to`].
pub fn connected_chordal_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>, VerifyError> {
    connected_chordal_graphs_up_to_with_cap(max_n, CHORDAL_ENUMERATION_CAP)
}

pub fn connected_chordal_graphs_up_to_with_cap(
    max_n: usize,
    cap: usize,
) -> Result<Vec<Vec<Graph>>, VerifyError> {
    levels(max_n, cap, Growth::Chordal)
}

pub fn enumerate_connected_chordal(n: usize) -> Result<Vec<Graph>, VerifyError> {
    Ok(connected_chordal_graphs_up_to(n)?.pop().expect("n >= 1"))
}
