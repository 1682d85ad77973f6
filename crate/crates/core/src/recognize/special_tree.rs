//! Special trees: subdivide every edge of a base tree once, then hang a
//! pendant vertex off every leaf of the result.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Bipartition, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialTreeError {
    #[error("base graph is not a tree")]
    BaseNotTree,
    #[error("base tree has no edge")]
    BaseEdgeless,
}

/// First failed condition when recognising a special tree, in check order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error("not a tree")]
    NotATree,
    #[error("fewer than three vertices remain after removing the leaves")]
    TooSmall,
    #[error("leaves of the stripped tree fall in both colour classes")]
    LeavesSplitAcrossColours,
    #[error("subdivision vertex {0} has degree {1} in the stripped tree, expected 2")]
    SubdivisionDegree(usize, usize),
    #[error("vertex {vertex} carries {pendants} pendants, expected {expected}")]
    PendantCount {
        vertex: usize,
        pendants: usize,
        expected: usize,
    },
}

/// Labels: base vertices first, subdivision vertices next in base edge
/// order, pendants last in ascending order of the leaf they hang from.
pub fn build_special_tree(base: &Graph) -> Result<Graph, SpecialTreeError> {
    if base.m() == 0 {
        return Err(SpecialTreeError::BaseEdgeless);
    }
    if !base.is_tree() {
        return Err(SpecialTreeError::BaseNotTree);
    }
    let n = base.n();
    let base_edges = base.edges();
    let mut edges = Vec::with_capacity(2 * base_edges.len() + n);
    for (i, &(u, v)) in base_edges.iter().enumerate() {
        edges.push((u, n + i));
        edges.push((n + i, v));
    }
    let mut next = n + base_edges.len();
    for leaf in (0..n).filter(|&v| base.degree(v) == 1) {
        edges.push((leaf, next));
        next += 1;
    }
    Ok(Graph::from_edges(next, &edges).expect("construction stays in range"))
}

/// Recovers the base tree of a special tree, labelled by the ascending
/// order of the retained vertices.
pub fn recognize_special_tree(g: &Graph) -> Result<Graph, Rejection> {
    if !g.is_tree() {
        return Err(Rejection::NotATree);
    }
    let pendants: VertexSet = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    let core = g.vertices().difference(&pendants);
    if core.len() < 3 {
        return Err(Rejection::TooSmall);
    }
    let (stripped, map) = g.induced_subgraph(&core).expect("core is non-empty");

    let Bipartition::Coloring(colour) = stripped.bipartition() else {
        unreachable!("trees are bipartite");
    };
    let leaves: Vec<usize> = (0..stripped.n())
        .filter(|&v| stripped.degree(v) == 1)
        .collect();
    let leaf_colour = colour[leaves[0]];
    if leaves.iter().any(|&v| colour[v] != leaf_colour) {
        return Err(Rejection::LeavesSplitAcrossColours);
    }
    for v in (0..stripped.n()).filter(|&v| colour[v] != leaf_colour) {
        if stripped.degree(v) != 2 {
            return Err(Rejection::SubdivisionDegree(map[v], stripped.degree(v)));
        }
    }
    for (v, &host) in map.iter().enumerate() {
        let carried = g.neighbors(host).intersection_len(&pendants);
        let expected = usize::from(stripped.degree(v) == 1);
        if carried != expected {
            return Err(Rejection::PendantCount {
                vertex: host,
                pendants: carried,
                expected,
            });
        }
    }

    let kept: Vec<usize> = (0..stripped.n())
        .filter(|&v| colour[v] == leaf_colour)
        .collect();
    let mut index = vec![usize::MAX; stripped.n()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<(usize, usize)> = (0..stripped.n())
        .filter(|&v| colour[v] != leaf_colour)
        .map(|s| {
            let mut ends = stripped.neighbors(s).iter();
            (index[ends.next().unwrap()], index[ends.next().unwrap()])
        })
        .collect();
    Ok(Graph::from_edges(kept.len(), &edges).expect("contracted base is valid"))
}

pub fn is_special_tree(g: &Graph) -> bool {
    recognize_special_tree(g).is_ok()
}
