//! Forbidden induced subgraphs, the PoC threshold classes they define,
//! special trees and (strong) criticality.

mod chordal;
mod critical;
mod embed;
mod patterns;
mod special_tree;

use serde::Serialize;

use crate::graph::Graph;
use crate::ratio::Ratio;

pub use chordal::{
    chordality, chordless_cycle, is_chordal, is_perfect_elimination_ordering, lex_bfs, Chordality,
};
pub use critical::{
    critical_counterexample, is_critical, is_critical_with_cap, is_strongly_critical,
    is_strongly_critical_with_cap, Criticality, CriticalityError, CRITICAL_CAP,
    STRONGLY_CRITICAL_CAP,
};
pub use embed::{find_induced, is_induced_embedding};
pub use patterns::{Pattern, PatternName};
pub use special_tree::{
    build_special_tree, is_special_tree, recognize_special_tree, Rejection, SpecialTreeError,
};

/// Embedding of a catalogue pattern into a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub pattern: PatternName,
    /// `map[i]` is the host vertex playing pattern vertex `i`.
    pub map: Vec<usize>,
}

pub fn contains_induced(g: &Graph, p: PatternName) -> Option<Embedding> {
    find_induced(g, &p.graph()).map(|map| Embedding { pattern: p, map })
}

/// First pattern of `set` (in the given order) that embeds in `g`.
pub fn first_contained(g: &Graph, set: &[PatternName]) -> Option<Embedding> {
    set.iter().find_map(|&p| contains_induced(g, p))
}

/// The three hereditary classes with a finite forbidden-subgraph
/// characterisation, from most to least restrictive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Characterization {
    /// Every induced subgraph has PoC 1.
    PocPerfect,
    /// Every induced subgraph has PoC at most 4/3.
    NearPerfect43,
    /// Every induced subgraph has PoC at most 3/2.
    NearPerfect32,
}

impl Characterization {
    pub const ALL: [Characterization; 3] = [
        Characterization::PocPerfect,
        Characterization::NearPerfect43,
        Characterization::NearPerfect32,
    ];

    pub fn threshold(self) -> Ratio {
        match self {
            Characterization::PocPerfect => Ratio::one(),
            Characterization::NearPerfect43 => Ratio::new(4, 3).unwrap(),
            Characterization::NearPerfect32 => Ratio::new(3, 2).unwrap(),
        }
    }

    pub fn forbidden(self) -> &'static [PatternName] {
        use PatternName::*;
        match self {
            Characterization::PocPerfect => &[P5, C5, C4],
            Characterization::NearPerfect43 => &[P5, C4],
            Characterization::NearPerfect32 => &[P7, C6, Delta1, Delta2],
        }
    }

    /// The class matching a threshold and forbidden set, if they belong
    /// together (the set is compared without regard to order).
    pub fn matching(threshold: &Ratio, forbidden: &[PatternName]) -> Option<Characterization> {
        let mut wanted = forbidden.to_vec();
        wanted.sort();
        wanted.dedup();
        Self::ALL.into_iter().find(|c| {
            let mut own = c.forbidden().to_vec();
            own.sort();
            c.threshold() == *threshold && own == wanted
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PocClass {
    PocPerfect,
    PocNearPerfect43,
    PocNearPerfect32,
    Unbounded,
}

impl std::fmt::Display for PocClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PocClass::PocPerfect => "PocPerfect",
            PocClass::PocNearPerfect43 => "PocNearPerfect43",
            PocClass::PocNearPerfect32 => "PocNearPerfect32",
            PocClass::Unbounded => "Unbounded",
        })
    }
}

/// Most restrictive class of `g`. The witness is the pattern that ruled out
/// the next more restrictive class; `Unbounded` always carries one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassLabel {
    pub class: PocClass,
    pub witness: Option<Embedding>,
}

pub fn classify(g: &Graph) -> ClassLabel {
    let Some(w) = first_contained(g, Characterization::PocPerfect.forbidden()) else {
        return ClassLabel {
            class: PocClass::PocPerfect,
            witness: None,
        };
    };
    // Only C5 can be the witness here.
    let Some(w) = first_contained(g, Characterization::NearPerfect43.forbidden()) else {
        return ClassLabel {
            class: PocClass::PocNearPerfect43,
            witness: Some(w),
        };
    };
    match first_contained(g, Characterization::NearPerfect32.forbidden()) {
        None => ClassLabel {
            class: PocClass::PocNearPerfect32,
            witness: Some(w),
        },
        Some(w) => ClassLabel {
            class: PocClass::Unbounded,
            witness: Some(w),
        },
    }
}
