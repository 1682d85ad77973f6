//! Minimum vertex cover by branch and bound.
//!
//! Reductions applied before every branch: isolated vertices are dropped, a
//! degree-1 vertex puts its neighbour into the cover, and a degree-2 vertex
//! whose neighbours are adjacent puts both neighbours into the cover.
//! Branching is on a maximum-degree vertex `v`: either `v` or all of `N(v)`
//! joins the cover. A greedy maximal matching bounds the remainder.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Size of a greedy maximal matching in `G[alive]`; a lower bound on any
/// vertex cover of that subgraph.
pub(crate) fn matching_lower_bound(g: &Graph, alive: &VertexSet) -> usize {
    let mut free = *alive;
    let mut size = 0;
    while let Some(u) = free.first() {
        free.remove(u);
        if let Some(w) = g.neighbors(u).intersection(&free).first() {
            free.remove(w);
            size += 1;
        }
    }
    size
}

/// Minimum vertex cover of `G[alive]`.
pub(crate) fn min_vertex_cover(g: &Graph, alive: &VertexSet) -> VertexSet {
    let mut cover = VertexSet::new();
    for comp in g.components_within(alive) {
        if comp.len() < 2 {
            continue;
        }
        let mut search = Search {
            g,
            best: greedy_cover(g, &comp),
        };
        search.run(comp, VertexSet::new());
        cover.union_with(&search.best);
    }
    cover
}

fn greedy_cover(g: &Graph, alive: &VertexSet) -> VertexSet {
    let mut alive = *alive;
    let mut cover = VertexSet::new();
    loop {
        let pick = alive
            .iter()
            .map(|v| (g.neighbors(v).intersection_len(&alive), v))
            .filter(|&(d, _)| d > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match pick {
            Some((_, v)) => {
                cover.insert(v);
                alive.remove(v);
            }
            None => return cover,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl Search<'_> {
    fn run(&mut self, mut alive: VertexSet, mut cover: VertexSet) {
        let g = self.g;
        reduce(g, &mut alive, &mut cover);

        let best_len = self.best.len();
        if cover.len() >= best_len {
            return;
        }
        if alive.is_empty() {
            self.best = cover;
            return;
        }
        if cover.len() + matching_lower_bound(g, &alive) >= best_len {
            return;
        }

        let comps = g.components_within(&alive);
        if comps.len() > 1 {
            for comp in &comps {
                cover.union_with(&min_vertex_cover(g, comp));
                if cover.len() >= best_len {
                    return;
                }
            }
            self.best = cover;
            return;
        }

        let (_, v) = alive
            .iter()
            .map(|v| (g.neighbors(v).intersection_len(&alive), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .expect("alive is non-empty");

        let mut take_v = cover;
        take_v.insert(v);
        let mut rest = alive;
        rest.remove(v);
        self.run(rest, take_v);

        let nbrs = g.neighbors(v).intersection(&alive);
        let mut rest = alive.difference(&nbrs);
        rest.remove(v);
        self.run(rest, cover.union(&nbrs));
    }
}

fn reduce(g: &Graph, alive: &mut VertexSet, cover: &mut VertexSet) {
    loop {
        let mut changed = false;
        let snapshot = *alive;
        for v in snapshot.iter() {
            if !alive.contains(v) {
                continue;
            }
            let nbrs = g.neighbors(v).intersection(alive);
            match nbrs.len() {
                0 => {
                    alive.remove(v);
                    changed = true;
                }
                1 => {
                    let w = nbrs.first().unwrap();
                    cover.insert(w);
                    alive.remove(v);
                    alive.remove(w);
                    changed = true;
                }
                2 => {
                    let mut it = nbrs.iter();
                    let (x, y) = (it.next().unwrap(), it.next().unwrap());
                    if g.has_edge(x, y) {
                        cover.insert(x);
                        cover.insert(y);
                        alive.remove(v);
                        alive.remove(x);
                        alive.remove(y);
                        changed = true;
                    }
                }
                _ => {}
            }
        }
        if !changed {
            return;
        }
    }
}

/// Every vertex cover of size exactly `tau`, sorted numerically.
pub(crate) fn all_covers_of_size(g: &Graph, tau: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    enumerate(g, tau, VertexSet::new(), VertexSet::new(), &mut out);
    out.sort_by(|a, b| a.cmp_numeric(b));
    out
}

fn enumerate(
    g: &Graph,
    tau: usize,
    cover: VertexSet,
    excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let open = g.vertices().difference(&cover);
    let branch = open.iter().find(|&u| g.neighbors(u).intersects(&open));
    let Some(u) = branch else {
        if cover.len() == tau {
            out.push(cover);
        }
        return;
    };
    if cover.len() + matching_lower_bound(g, &open) > tau {
        return;
    }
    let mut with_u = cover;
    with_u.insert(u);
    enumerate(g, tau, with_u, excluded, out);

    let nbrs = *g.neighbors(u);
    if !nbrs.intersects(&excluded) && !excluded.contains(u) {
        let mut ex = excluded;
        ex.insert(u);
        enumerate(g, tau, cover.union(&nbrs), ex, out);
    }
}
