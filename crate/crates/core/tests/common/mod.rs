//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! every value is found by trying all vertex subsets or all permutations.

#![allow(dead_code)]

use poc_core::{Graph, VertexSet};

pub fn subset(n: usize, mask: u64) -> VertexSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn covers(g: &Graph, mask: u64) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
}

fn connected_mask(g: &Graph, mask: u64) -> bool {
    let Some(start) = (0..g.n()).find(|&v| mask >> v & 1 == 1) else {
        return false;
    };
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v).iter() {
            if mask >> u & 1 == 1 && seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen == mask
}

/// Smallest vertex cover size, by trying every subset.
pub fn naive_tau(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    (0..1u64 << g.n())
        .filter(|&m| covers(g, m))
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Sum over components with an edge of the smallest connected vertex
/// cover, by trying every subset of the component.
pub fn naive_tauc(g: &Graph) -> usize {
    assert!(g.n() <= 20);
    let mut total = 0;
    for comp in g.connected_components() {
        if comp.len() < 2 {
            continue;
        }
        let (h, _) = g.induced_subgraph(&comp).unwrap();
        total += (1..1u64 << h.n())
            .filter(|&m| covers(&h, m) && connected_mask(&h, m))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap();
    }
    total
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest upper-triangle adjacency string (column order) over all
/// vertex orders, most significant pair first.
pub fn brute_canonical_code(g: &Graph) -> u128 {
    let n = g.n();
    permutations(n)
        .into_iter()
        .map(|order| {
            let mut code = 0u128;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | g.has_edge(order[i], order[j]) as u128;
                }
            }
            code
        })
        .min()
        .unwrap()
}

/// Whether some vertex subset of `host` induces a copy of `pattern`.
pub fn naive_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k > host.n() {
        return false;
    }
    let target = brute_canonical_code(pattern);
    (0..1u64 << host.n())
        .filter(|m| m.count_ones() as usize == k)
        .any(|m| {
            let (h, _) = host.induced_subgraph(&subset(host.n(), m)).unwrap();
            h.m() == pattern.m() && brute_canonical_code(&h) == target
        })
}
