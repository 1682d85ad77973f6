//! Chordality via lexicographic BFS.

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering (each vertex's later neighbours form
    /// a clique).
    Chordal(Vec<usize>),
    /// Vertices of an induced cycle of length at least four, in order.
    ChordlessCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Lexicographic BFS visit order (ties broken by smallest vertex).
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    // Labels are compared lexicographically; a visit at step i appends
    // n - i, so earlier visits weigh more.
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = VertexSet::new();
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .unwrap();
        visited.insert(v);
        order.push(v);
        for u in g.neighbors(v).difference(&visited).iter() {
            labels[u].push(n - step);
        }
    }
    order
}

pub fn is_perfect_elimination_ordering(g: &Graph, peo: &[usize]) -> bool {
    let n = g.n();
    let mut position = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        position[v] = i;
    }
    let mut later = g.vertices();
    for &v in peo {
        later.remove(v);
        let nbrs = g.neighbors(v).intersection(&later);
        let Some(parent) = nbrs.iter().min_by_key(|&u| position[u]) else {
            continue;
        };
        let mut rest = nbrs;
        rest.remove(parent);
        if !rest.is_subset(g.neighbors(parent)) {
            return false;
        }
    }
    true
}

pub fn chordality(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_ordering(g, &peo) {
        return Chordality::Chordal(peo);
    }
    Chordality::ChordlessCycle(
        chordless_cycle(g).expect("a graph without a PEO has a chordless cycle"),
    )
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_chordal()
}

/// For a centre `v` with non-adjacent neighbours `x`, `y`, a shortest
/// `x`-`y` path avoiding the rest of `N[v]` closes an induced cycle through
/// `v` of length at least four. Such a triple exists iff `g` is not chordal.
pub fn chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nbrs = *g.neighbors(v);
        for x in nbrs.iter() {
            for y in nbrs.iter().filter(|&y| y > x && !g.has_edge(x, y)) {
                let mut allowed = g.vertices().difference(&nbrs);
                allowed.remove(v);
                allowed.insert(x);
                allowed.insert(y);
                if let Some(path) = shortest_path(g, x, y, &allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for u in g
            .neighbors(v)
            .intersection(allowed)
            .difference(&seen)
            .iter()
        {
            seen.insert(u);
            parent[u] = v;
            queue.push_back(u);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::PatternName;

    fn assert_chordless(g: &Graph, cycle: &[usize]) {
        let k = cycle.len();
        assert!(k >= 4);
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                assert_eq!(g.has_edge(cycle[i], cycle[j]), consecutive);
            }
        }
    }

    #[test]
    fn trees_and_cliques() {
        assert!(is_chordal(&Graph::path(6)));
        assert!(is_chordal(&Graph::star(5)));
        assert!(is_chordal(&Graph::complete(5)));
    }

    #[test]
    fn cycles_are_witnessed() {
        for (g, len) in [
            (Graph::cycle(4), Some(4)),
            (Graph::cycle(7), Some(7)),
            (PatternName::Delta1.graph(), Some(4)),
        ] {
            match chordality(&g) {
                Chordality::ChordlessCycle(c) => {
                    assert_chordless(&g, &c);
                    if let Some(len) = len {
                        assert_eq!(c.len(), len);
                    }
                }
                other => panic!("expected a cycle, got {other:?}"),
            }
        }
    }
}
