//! Minimum connected vertex cover of one connected component.
//!
//! Iterative deepening over the cover size `k`, starting at `tau`. For each
//! `k`, connected vertex sets are grown from a root by deciding frontier
//! vertices in or out. Cut vertices of the component lie in every connected
//! cover and leaves lie in no minimum one (once the component has three or
//! more vertices), so both are fixed up front.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::vc::matching_lower_bound;

/// `comp` must be a connected component of `g` with at least one edge and
/// `tau` its vertex cover number.
pub(crate) fn min_connected_vertex_cover(
    g: &Graph,
    comp: &VertexSet,
    cutvertices: &VertexSet,
    tau: usize,
) -> VertexSet {
    if comp.len() == 2 {
        return VertexSet::singleton(comp.first().unwrap());
    }
    let forced = cutvertices.intersection(comp);
    let leaves: VertexSet = comp
        .iter()
        .filter(|&v| g.neighbors(v).intersection_len(comp) == 1)
        .collect();
    let search = Search {
        g,
        comp: *comp,
        forced,
    };
    let start = tau.max(forced.len());
    for k in start..=comp.len() {
        if let Some(cover) = search.at_most(k, &leaves) {
            return cover;
        }
    }
    unreachable!("the whole component is a connected vertex cover")
}

struct Search<'a> {
    g: &'a Graph,
    comp: VertexSet,
    forced: VertexSet,
}

impl Search<'_> {
    fn at_most(&self, k: usize, leaves: &VertexSet) -> Option<VertexSet> {
        if let Some(root) = self.forced.first() {
            return self.grow(VertexSet::singleton(root), *leaves, k);
        }
        // No cut vertex: the component is 2-connected (hence leafless) and a
        // cover must contain an endpoint of its first edge.
        let u = self.comp.first().unwrap();
        let v = self
            .g
            .neighbors(u)
            .intersection(&self.comp)
            .first()
            .unwrap();
        if let Some(c) = self.grow(VertexSet::singleton(u), *leaves, k) {
            return Some(c);
        }
        let mut out = *leaves;
        out.insert(u);
        self.grow(VertexSet::singleton(v), out, k)
    }

    /// Extends the connected set `inside` avoiding `outside` (an independent
    /// set whose neighbours must all end up inside).
    fn grow(&self, inside: VertexSet, outside: VertexSet, k: usize) -> Option<VertexSet> {
        let g = self.g;
        let open = self.comp.difference(&inside);
        if g.is_independent(&open) {
            return Some(inside);
        }
        if inside.len() >= k {
            return None;
        }

        let mut required = self.forced;
        for x in outside.iter() {
            required.union_with(g.neighbors(x));
        }
        required.intersect_with(&self.comp);
        required.difference_with(&inside);
        let undecided = open.difference(&required).difference(&outside);
        if inside.len() + required.len() + matching_lower_bound(g, &undecided) > k {
            return None;
        }

        let allowed = self.comp.difference(&outside);
        let reach = g.reach(&inside, &allowed);
        if !required.is_subset(&reach) || !g.is_independent(&allowed.difference(&reach)) {
            return None;
        }

        let mut frontier = VertexSet::new();
        for v in inside.iter() {
            frontier.union_with(g.neighbors(v));
        }
        frontier.intersect_with(&allowed);
        frontier.difference_with(&inside);

        if let Some(v) = frontier.intersection(&required).first() {
            let mut next = inside;
            next.insert(v);
            return self.grow(next, outside, k);
        }

        let (_, v) = frontier
            .iter()
            .map(|v| (g.neighbors(v).intersection_len(&open), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))?;

        let mut next = inside;
        next.insert(v);
        if let Some(c) = self.grow(next, outside, k) {
            return Some(c);
        }
        if g.neighbors(v).intersects(&outside) {
            return None;
        }
        let mut out = outside;
        out.insert(v);
        self.grow(inside, out, k)
    }
}
