//! Exact canonical forms for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency string (pairs in column order `(0,1), (0,2), (1,2), (0,3), ..`)
//! over all vertex orders reachable in an individualisation-refinement tree.
//! Equitable refinement and cell order depend only on the graph structure,
//! so isomorphic graphs have the same set of leaf strings and hence the same
//! minimum. Branches are cut when their fixed prefix already exceeds the
//! best string, and among interchangeable twin vertices only one is tried.

use crate::graph::Graph;

/// Largest graph with a canonical form (the string must fit in a `u128`).
pub const CANON_MAX_VERTICES: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Adjacency string packed so that the pair `(0,1)` is the most
    /// significant bit.
    pub fn code(&self) -> u128 {
        self.code
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let total = pair_count(n);
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                let k = pair_index(i, j);
                if self.code >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("canonical code describes a valid graph")
    }
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

pub fn canonical_form(g: &Graph) -> Option<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// Canonical form plus the vertex order realising it: `order[p]` is the
/// original vertex placed at canonical position `p`.
pub fn canonical_labeling(g: &Graph) -> Option<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return None;
    }
    let mut rows = [0u16; CANON_MAX_VERTICES];
    for (v, row) in rows.iter_mut().enumerate().take(n) {
        for u in g.neighbors(v).iter() {
            *row |= 1 << u;
        }
    }
    let mut search = Search {
        n,
        rows,
        best_code: 0,
        best_order: [0; CANON_MAX_VERTICES],
        found: false,
    };
    let mut part = Partition {
        order: [0; CANON_MAX_VERTICES],
        starts: 1,
    };
    for (i, slot) in part.order.iter_mut().enumerate().take(n) {
        *slot = i as u8;
    }
    search.refine(&mut part);
    search.explore(&part);
    let order = search.best_order[..n].iter().map(|&v| v as usize).collect();
    Some((
        CanonicalForm {
            n: n as u8,
            code: search.best_code,
        },
        order,
    ))
}

/// Ordered partition of the vertices into contiguous cells of `order`; bit
/// `p` of `starts` marks a cell beginning at position `p`.
#[derive(Clone, Copy)]
struct Partition {
    order: [u8; CANON_MAX_VERTICES],
    starts: u32,
}

impl Partition {
    fn cell_end(&self, start: usize, n: usize) -> usize {
        let later = self.starts >> (start + 1);
        if later == 0 {
            n
        } else {
            start + 1 + later.trailing_zeros() as usize
        }
    }

    fn leading_singletons(&self, n: usize) -> usize {
        let mut p = 0;
        while p < n && self.cell_end(p, n) == p + 1 {
            p += 1;
        }
        p
    }
}

struct Search {
    n: usize,
    rows: [u16; CANON_MAX_VERTICES],
    best_code: u128,
    best_order: [u8; CANON_MAX_VERTICES],
    found: bool,
}

impl Search {
    /// Splits cells by neighbour counts into every cell until stable.
    fn refine(&self, part: &mut Partition) {
        let n = self.n;
        loop {
            let mut masks = [0u16; CANON_MAX_VERTICES];
            let mut cells = 0;
            let mut start = 0;
            while start < n {
                let end = part.cell_end(start, n);
                for &v in &part.order[start..end] {
                    masks[cells] |= 1 << v;
                }
                cells += 1;
                start = end;
            }

            let mut changed = false;
            let mut start = 0;
            while start < n {
                let end = part.cell_end(start, n);
                if end - start > 1 {
                    let mut keyed: Vec<(u128, u8)> = part.order[start..end]
                        .iter()
                        .map(|&v| {
                            let row = self.rows[v as usize];
                            let mut sig = 0u128;
                            for &mask in &masks[..cells] {
                                sig = (sig << 5) | (row & mask).count_ones() as u128;
                            }
                            (sig, v)
                        })
                        .collect();
                    if keyed.iter().any(|k| k.0 != keyed[0].0) {
                        keyed.sort_unstable();
                        for (i, &(sig, v)) in keyed.iter().enumerate() {
                            part.order[start + i] = v;
                            if i > 0 && sig != keyed[i - 1].0 {
                                part.starts |= 1 << (start + i);
                            }
                        }
                        changed = true;
                    }
                }
                start = end;
            }
            if !changed {
                return;
            }
        }
    }

    fn code_of(&self, order: &[u8]) -> u128 {
        let mut code = 0u128;
        for j in 1..order.len() {
            let row = self.rows[order[j] as usize];
            for &u in &order[..j] {
                code = (code << 1) | ((row >> u) & 1) as u128;
            }
        }
        code
    }

    fn explore(&mut self, part: &Partition) {
        let n = self.n;
        let fixed = part.leading_singletons(n);
        if self.found {
            let prefix = self.code_of(&part.order[..fixed]);
            let shift = pair_count(n) - pair_count(fixed);
            let best_prefix = if shift >= 128 {
                0
            } else {
                self.best_code >> shift
            };
            if prefix > best_prefix {
                return;
            }
        }
        if fixed == n {
            let code = self.code_of(&part.order[..n]);
            if !self.found || code < self.best_code {
                self.found = true;
                self.best_code = code;
                self.best_order = part.order;
            }
            return;
        }

        let end = part.cell_end(fixed, n);
        let candidates: Vec<u8> = part.order[fixed..end].to_vec();
        let mut tried: Vec<u8> = Vec::new();
        for &v in &candidates {
            let is_twin = tried.iter().any(|&u| {
                let both = (1u16 << u) | (1u16 << v);
                (self.rows[u as usize] ^ self.rows[v as usize]) & !both == 0
            });
            if is_twin {
                continue;
            }
            tried.push(v);

            let mut child = *part;
            let pos = part.order[fixed..end].iter().position(|&x| x == v).unwrap() + fixed;
            child.order.swap(fixed, pos);
            child.starts |= 1 << (fixed + 1);
            self.refine(&mut child);
            self.explore(&child);
        }
    }
}
