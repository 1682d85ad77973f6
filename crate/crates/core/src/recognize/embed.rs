//! Induced-subgraph search by plain backtracking.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// An injective map `pattern vertex -> host vertex` under which adjacency
/// and non-adjacency are both preserved, if one exists.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > host.n() {
        return None;
    }
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; k];
    let all = host.vertices();
    extend(host, pattern, &order, 0, &mut map, &all).then_some(map)
}

pub fn is_induced_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() {
        return false;
    }
    (0..map.len()).all(|i| (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(map[i], map[j])))
}

/// Breadth-first from the highest-degree vertex of each component so that
/// every placed vertex after the first is constrained by an adjacency.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = VertexSet::new();
    while order.len() < pattern.n() {
        let start = (0..pattern.n())
            .filter(|&v| !placed.contains(v))
            .max_by(|&a, &b| pattern.degree(a).cmp(&pattern.degree(b)).then(b.cmp(&a)))
            .unwrap();
        placed.insert(start);
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in pattern.neighbors(v).iter() {
                if !placed.contains(u) {
                    placed.insert(u);
                    order.push(u);
                }
            }
        }
    }
    order
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    all: &VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = *all;
    for &q in &order[..depth] {
        let image = map[q];
        cand.remove(image);
        if pattern.has_edge(p, q) {
            cand.intersect_with(host.neighbors(image));
        } else {
            cand.difference_with(host.neighbors(image));
        }
    }
    let need = pattern.degree(p);
    for v in cand.iter() {
        if host.degree(v) < need {
            continue;
        }
        map[p] = v;
        if extend(host, pattern, order, depth + 1, map, all) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}
