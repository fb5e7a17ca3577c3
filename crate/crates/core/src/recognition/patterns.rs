//! The fixed catalog of small graphs used by the recognizers: the nine
//! forbidden induced subgraphs F1..F9, the exceptional graph F8⁻ whose Gallai
//! graph is a tree, and the gem.
//!
//! Vertex labellings follow the drawings the catalog was transcribed from,
//! shifted to start at 0.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F8Minus,
    Gem,
}

const F1_EDGES: &[(usize, usize)] = &[(0, 3), (1, 3), (2, 3)];
const F2_EDGES: &[(usize, usize)] = &[(0, 1), (1, 4), (4, 0), (2, 3), (3, 4), (4, 2)];
const F3_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
    (1, 4), (4, 2), (2, 5), (5, 1),
];
const F4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 2), (4, 5)];
const F5_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 4), (4, 5), (5, 3), (3, 0),
    (1, 3), (3, 4), (4, 1),
];
const F6_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 3), (2, 5)];
const F7_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
    (1, 6), (6, 2), (3, 6), (6, 4),
];
const F8_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 3), (3, 6), (6, 5), (5, 4), (4, 0),
    (4, 1), (1, 5), (5, 2), (2, 6),
];
const F9_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 5), (5, 4), (4, 3), (3, 0),
    (3, 1), (1, 4), (4, 2),
    (1, 6), (6, 2), (3, 6), (6, 4),
];
// Drawn vertices a, b, e, f, c, d map to 0..5 in that order.
const F8_MINUS_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
    (5, 1), (1, 4), (4, 2),
];
const GEM_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)];

impl Pattern {
    /// F1..F9 in order.
    pub const FORBIDDEN: [Pattern; 9] = [
        Pattern::F1,
        Pattern::F2,
        Pattern::F3,
        Pattern::F4,
        Pattern::F5,
        Pattern::F6,
        Pattern::F7,
        Pattern::F8,
        Pattern::F9,
    ];

    pub const ALL: [Pattern; 11] = [
        Pattern::F1,
        Pattern::F2,
        Pattern::F3,
        Pattern::F4,
        Pattern::F5,
        Pattern::F6,
        Pattern::F7,
        Pattern::F8,
        Pattern::F9,
        Pattern::F8Minus,
        Pattern::Gem,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::F1 => "F1",
            Pattern::F2 => "F2",
            Pattern::F3 => "F3",
            Pattern::F4 => "F4",
            Pattern::F5 => "F5",
            Pattern::F6 => "F6",
            Pattern::F7 => "F7",
            Pattern::F8 => "F8",
            Pattern::F9 => "F9",
            Pattern::F8Minus => "F8minus",
            Pattern::Gem => "gem",
        }
    }

    fn definition(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            Pattern::F1 => (4, F1_EDGES),
            Pattern::F2 => (5, F2_EDGES),
            Pattern::F3 => (6, F3_EDGES),
            Pattern::F4 => (6, F4_EDGES),
            Pattern::F5 => (6, F5_EDGES),
            Pattern::F6 => (6, F6_EDGES),
            Pattern::F7 => (7, F7_EDGES),
            Pattern::F8 => (7, F8_EDGES),
            Pattern::F9 => (7, F9_EDGES),
            Pattern::F8Minus => (6, F8_MINUS_EDGES),
            Pattern::Gem => (5, GEM_EDGES),
        }
    }

    fn index(self) -> usize {
        Pattern::ALL.iter().position(|&p| p == self).expect("listed")
    }

    pub fn graph(self) -> &'static Graph {
        static CATALOG: OnceLock<Vec<Graph>> = OnceLock::new();
        let catalog = CATALOG.get_or_init(|| {
            Pattern::ALL
                .iter()
                .map(|p| {
                    let (n, edges) = p.definition();
                    Graph::from_edges(n, edges.iter().copied()).expect("catalog graphs are valid")
                })
                .collect()
        });
        &catalog[self.index()]
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown pattern {s:?}"))
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}
