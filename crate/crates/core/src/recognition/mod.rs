//! Decision procedures for "Γ(G) is a forest" and "Γ(G) is a tree".
//!
//! The forest question is answered by checking that G is chordal and contains
//! none of F1..F9 as an induced subgraph. The tree question has three
//! independent routes: build Γ(G) directly, combine the forest test with the
//! homogeneous-set condition, or inspect the block structure of G.

mod blocks;
mod certificate;
mod chordal;
mod homogeneous;
mod induced;
mod patterns;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use blocks::{block_cut_tree, classify_block, BlockCutTree, BlockShape};
pub use certificate::{BlockCondition, Certificate, CertificateError, Verdict};
pub use chordal::{is_chordal, lex_bfs, perfect_elimination_order};
pub use homogeneous::{find_bad_homogeneous_set, homogeneous_closure, is_homogeneous};
pub use induced::{find_induced_pattern, PATTERN_MAX_VERTICES};
pub use patterns::Pattern;

use crate::graph::{is_isomorphic_small, to_graph6, Edge, Graph, GraphError, VertexSet};
use crate::operators::gallai;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("vertex {0} is isolated; the tree characterization needs a graph without isolated vertices")]
    IsolatedVertex(usize),
    #[error("the tree characterization needs at least one vertex")]
    EmptyGraph,
    #[error("pattern has {0} vertices, more than the supported {PATTERN_MAX_VERTICES}")]
    PatternTooLarge(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("the {route} route does not answer the {question} question")]
    UnsupportedRoute { question: Question, route: Route },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Question {
    Forest,
    Tree,
}

/// How a recognizer reaches its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// Build Γ(G) and inspect it.
    Direct,
    /// Forbidden induced subgraphs, chordality and (for trees) homogeneous sets.
    Characterization,
    /// Block-cut structure of G (tree question only).
    Structural,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Direct, Route::Characterization, Route::Structural];

    pub fn name(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Characterization => "characterization",
            Route::Structural => "structural",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown route {s:?}"))
    }
}

impl fmt::Display for Question {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Question::Forest => "forest",
            Question::Tree => "tree",
        })
    }
}

/// Γ(G) is a forest iff G is chordal and (F1,…,F9)-free.
pub fn is_gallai_forest(g: &Graph) -> Verdict {
    let chordal = is_chordal(g);
    if !chordal.answer {
        return chordal;
    }
    for pattern in Pattern::FORBIDDEN {
        let found = find_induced_pattern(g, pattern.graph()).expect("catalog patterns are small");
        if let Some(map) = found {
            return Verdict::no(Certificate::PatternEmbedding { pattern, map });
        }
    }
    Verdict::yes()
}

/// Builds Γ(G) and reports a cycle in it, if any.
pub fn gallai_forest_direct(g: &Graph) -> Result<Verdict, RecognitionError> {
    let gamma = gallai(g)?;
    Ok(match gamma.graph().find_cycle() {
        Some(cycle) => Verdict::no(Certificate::GallaiCycle {
            cycle: cycle.into_iter().map(|i| gamma.label(i)).collect(),
        }),
        None => Verdict::yes(),
    })
}

fn check_tree_hypothesis(g: &Graph) -> Result<(), RecognitionError> {
    if g.n() == 0 {
        return Err(RecognitionError::EmptyGraph);
    }
    match g.isolated_vertices().next() {
        Some(v) => Err(RecognitionError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Smallest edge of each of the first two components that carry edges.
fn disconnection_witness(g: &Graph) -> Option<Certificate> {
    let firsts: Vec<Edge> = g
        .connected_components()
        .iter()
        .filter_map(|c| {
            let u = c.min()?;
            g.neighbors(u).next().map(|v| Edge::new(u, v))
        })
        .take(2)
        .collect();
    match firsts[..] {
        [first, second] => Some(Certificate::GallaiDisconnection { first, second }),
        _ => None,
    }
}

/// Decides whether Γ(G) is a tree from the block structure of G: either G is
/// F8⁻, or G is connected, every block is K2, K3 or a gem, every cut-vertex
/// is in at most two blocks and has degree at most three, every triangle
/// block has exactly two cut-vertices and every gem block exactly one, which
/// has degree two in the gem.
pub fn is_gallai_tree_structural(g: &Graph) -> Result<Verdict, RecognitionError> {
    check_tree_hypothesis(g)?;
    if g.n() == 6 && is_isomorphic_small(g, Pattern::F8Minus.graph()).expect("six vertices") {
        return Ok(Verdict::yes());
    }
    if let Some(witness) = disconnection_witness(g) {
        return Ok(Verdict::no(witness));
    }
    let tree = block_cut_tree(g)?;
    let violation = |block: &VertexSet, condition, vertex| {
        Ok(Verdict::no(Certificate::BlockViolation {
            block: block.clone(),
            condition,
            vertex,
        }))
    };

    for (index, block) in tree.blocks().iter().enumerate() {
        let cuts = tree.cut_vertices_in(index);
        match classify_block(g, block) {
            None => return violation(block, BlockCondition::BlockShape, None),
            Some(BlockShape::Edge) => {}
            Some(BlockShape::Triangle) => {
                if cuts.len() != 2 {
                    return violation(block, BlockCondition::TriangleCutVertices, None);
                }
            }
            Some(BlockShape::Gem) => {
                let [c] = cuts[..] else {
                    return violation(block, BlockCondition::GemCutVertices, None);
                };
                if block.iter().filter(|&x| g.has_edge(c, x)).count() != 2 {
                    return violation(block, BlockCondition::GemCutVertexDegree, Some(c));
                }
            }
        }
    }
    for c in tree.cut_vertices().iter() {
        let containing = tree.blocks_containing(c);
        let first = &tree.blocks()[containing[0]];
        if containing.len() > 2 {
            return violation(first, BlockCondition::CutVertexBlockCount, Some(c));
        }
        if g.degree(c) > 3 {
            return violation(first, BlockCondition::CutVertexDegree, Some(c));
        }
    }
    Ok(Verdict::yes())
}

/// Decides whether Γ(G) is a tree along the chosen route. G must have at
/// least one vertex and no isolated vertices.
pub fn is_gallai_tree(g: &Graph, route: Route) -> Result<Verdict, RecognitionError> {
    check_tree_hypothesis(g)?;
    match route {
        Route::Direct => {
            let gamma = gallai(g)?;
            if let Some(cycle) = gamma.graph().find_cycle() {
                return Ok(Verdict::no(Certificate::GallaiCycle {
                    cycle: cycle.into_iter().map(|i| gamma.label(i)).collect(),
                }));
            }
            let parts = gamma.graph().connected_components();
            if let [a, b, ..] = &parts[..] {
                return Ok(Verdict::no(Certificate::GallaiDisconnection {
                    first: gamma.label(a.min().expect("non-empty")),
                    second: gamma.label(b.min().expect("non-empty")),
                }));
            }
            Ok(Verdict::yes())
        }
        Route::Characterization => {
            let forest = is_gallai_forest(g);
            if !forest.answer {
                return Ok(forest);
            }
            Ok(match find_bad_homogeneous_set(g) {
                Some((set, edge)) => Verdict::no(Certificate::NonIndependentHomogeneousSet { set, edge }),
                None => Verdict::yes(),
            })
        }
        Route::Structural => is_gallai_tree_structural(g),
    }
}

/// Forest question along a route; the structural route only exists for trees.
pub fn is_gallai_forest_by(g: &Graph, route: Route) -> Result<Verdict, RecognitionError> {
    match route {
        Route::Direct => gallai_forest_direct(g),
        Route::Characterization => Ok(is_gallai_forest(g)),
        Route::Structural => Err(RecognitionError::UnsupportedRoute {
            question: Question::Forest,
            route,
        }),
    }
}

/// One verdict as emitted on the wire: `{input, question, route, answer, certificate}`.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub input: String,
    pub question: Question,
    pub route: Route,
    pub answer: bool,
    pub certificate: Certificate,
}

impl VerdictRecord {
    pub fn new(g: &Graph, question: Question, route: Route, verdict: Verdict) -> Self {
        VerdictRecord {
            input: to_graph6(g),
            question,
            route,
            answer: verdict.answer,
            certificate: verdict.certificate,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }
}
