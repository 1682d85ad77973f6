//! Immutable simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex set mentions vertex {v} but the graph has {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Simple undirected graph with symmetric, irreflexive bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

/// Either a proper 2-colouring or an odd cycle proving there is none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// `colour[v]` is `false` for one side and `true` for the other.
    Coloring(Vec<bool>),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Self::from_edges_with_cap(n, edges, MAX_VERTICES)
    }

    pub fn from_edges_with_cap(
        n: usize,
        edges: &[(usize, usize)],
        cap: usize,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let cap = cap.min(MAX_VERTICES);
        if n > cap {
            return Err(GraphError::TooLarge { n, cap });
        }
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, m, adj })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Self::from_edges(n, &[])
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path on at least one vertex")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("valid clique")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("valid star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Edges with both endpoints in `s`.
    pub fn edge_count_within(&self, s: &VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].intersection_len(s))
            .sum::<usize>()
            / 2
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.upper_bound() > self.n {
            return Err(GraphError::VertexOutOfRange {
                v: s.upper_bound() - 1,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach(&self, start: &VertexSet, within: &VertexSet) -> VertexSet {
        let mut seen = start.intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut rest = *within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(&VertexSet::singleton(v), &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach(&VertexSet::singleton(0), &self.vertices()).len() == self.n
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(&VertexSet::singleton(v), s) == *s,
        }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        let outside = self.vertices().difference(s);
        self.is_independent(&outside)
    }

    /// A vertex cover whose trace on every component with an edge induces a
    /// connected subgraph.
    pub fn is_connected_vertex_cover(&self, s: &VertexSet) -> bool {
        self.is_vertex_cover(s)
            && self
                .connected_components()
                .iter()
                .all(|comp| self.is_connected_set(&comp.intersection(s)))
    }

    /// `G[s]` relabelled `0..|s|` in ascending original order, together with
    /// the map from new labels to original vertices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        self.check_set(s)?;
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![VertexSet::new(); map.len()];
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].intersection(s).iter() {
                adj[i].insert(index[u]);
            }
        }
        let m = self.edge_count_within(s);
        Ok((
            Graph {
                n: map.len(),
                m,
                adj,
            },
            map,
        ))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.adj[u].contains(v) {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
            g.m -= 1;
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + self.n, v + self.n)),
        );
        Graph::from_edges(self.n + other.n, &edges)
    }

    /// Hop distance between two vertex sets; `Some(0)` when they meet and
    /// `None` when no path joins them.
    pub fn distance(&self, a: &VertexSet, b: &VertexSet) -> Option<usize> {
        if a.intersects(b) {
            return Some(0);
        }
        let all = self.vertices();
        let mut seen = a.intersection(&all);
        let mut frontier = seen;
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            if next.intersects(b) {
                return Some(depth);
            }
            seen.union_with(&next);
            frontier = next;
        }
        None
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for u in self.adj[v].iter() {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Bridges and cut vertices from a single depth-first pass.
    pub fn bridges_and_cutvertices(&self) -> (Vec<(usize, usize)>, VertexSet) {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut cuts = VertexSet::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, neighbours still to visit)
            let mut stack: Vec<(usize, usize, Vec<usize>)> = Vec::new();
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, usize::MAX, self.adj[root].to_vec()));
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if let Some(u) = top.2.pop() {
                    if disc[u] == usize::MAX {
                        disc[u] = time;
                        low[u] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, self.adj[u].to_vec()));
                    } else if u != parent {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push((p.min(v), p.max(v)));
                        }
                        if p != root && low[v] >= disc[p] {
                            cuts.insert(p);
                        }
                    }
                }
            }
            if root_children > 1 {
                cuts.insert(root);
            }
        }
        bridges.sort_unstable();
        (bridges, cuts)
    }

    pub fn bridges(&self) -> Vec<(usize, usize)> {
        self.bridges_and_cutvertices().0
    }

    pub fn cutvertices(&self) -> VertexSet {
        self.bridges_and_cutvertices().1
    }

    pub fn bipartition(&self) -> Bipartition {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].unwrap();
                for u in self.adj[v].iter() {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!cv);
                            parent[u] = v;
                            queue.push_back(u);
                        }
                        Some(cu) if cu == cv => {
                            return Bipartition::OddCycle(odd_cycle(&parent, v, u));
                        }
                        _ => {}
                    }
                }
            }
        }
        Bipartition::Coloring(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Coloring(_))
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n && self.is_connected()
    }
}

/// Closes the BFS-tree paths from `u` and `v` (equal colour, adjacent) at
/// their lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let mut pu = path_to_root(u);
    let mut pv = path_to_root(v);
    let mut lca = *pu.last().unwrap();
    while pu.len() > 1 && pv.len() > 1 && pu[pu.len() - 2] == pv[pv.len() - 2] {
        pu.pop();
        pv.pop();
        lca = *pu.last().unwrap();
    }
    pu.pop();
    pv.pop();
    let mut cycle = pu;
    cycle.push(lca);
    cycle.extend(pv.into_iter().rev());
    cycle
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
