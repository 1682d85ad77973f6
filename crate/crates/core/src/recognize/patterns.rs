use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::Graph;

/// The forbidden induced subgraphs of the PoC threshold classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PatternName {
    P4,
    P5,
    P7,
    C4,
    C5,
    C6,
    C7,
    Delta1,
    Delta2,
}

impl PatternName {
    pub const ALL: [PatternName; 9] = [
        PatternName::P4,
        PatternName::P5,
        PatternName::P7,
        PatternName::C4,
        PatternName::C5,
        PatternName::C6,
        PatternName::C7,
        PatternName::Delta1,
        PatternName::Delta2,
    ];

    pub fn graph(self) -> Graph {
        match self {
            PatternName::P4 => Graph::path(4),
            PatternName::P5 => Graph::path(5),
            PatternName::P7 => Graph::path(7),
            PatternName::C4 => Graph::cycle(4),
            PatternName::C5 => Graph::cycle(5),
            PatternName::C6 => Graph::cycle(6),
            PatternName::C7 => Graph::cycle(7),
            PatternName::Delta1 => Graph::from_edges(7, &DELTA1).expect("valid"),
            PatternName::Delta2 => Graph::from_edges(
                7,
                &DELTA1[..]
                    .iter()
                    .copied()
                    .filter(|&e| e != (B, D))
                    .collect::<Vec<_>>(),
            )
            .expect("valid"),
        }
    }

    pub fn pattern(self) -> Pattern {
        Pattern {
            name: self,
            graph: self.graph(),
        }
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;
const G: usize = 6;

/// Two 4-cycles `a-b-d-c` and `d-e-f-g` sharing `d`.
const DELTA1: [(usize, usize); 8] = [
    (A, B),
    (B, D),
    (A, C),
    (C, D),
    (D, E),
    (E, F),
    (F, G),
    (G, D),
];

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternName::P4 => "P4",
            PatternName::P5 => "P5",
            PatternName::P7 => "P7",
            PatternName::C4 => "C4",
            PatternName::C5 => "C5",
            PatternName::C6 => "C6",
            PatternName::C7 => "C7",
            PatternName::Delta1 => "Delta1",
            PatternName::Delta2 => "Delta2",
        };
        f.write_str(s)
    }
}

impl FromStr for PatternName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        PatternName::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown pattern {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub name: PatternName,
    pub graph: Graph,
}
