//! Exhaustive oracle sweeps. Each check evaluates two or more independent
//! computations on every graph of a range and records the graphs on which
//! they disagree.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{canonical_codes, graph_from_code, pair_count};
use super::HarnessError;
use crate::graph::{parse_graph6, to_graph6, Edge, Graph, VertexSet};
use crate::operators::{apex_embedding, gallai};
use crate::recognition::{find_bad_homogeneous_set, is_gallai_forest, is_gallai_tree, Route};

/// Codes per work unit in labeled sweeps.
const CHUNK: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// Γ(G) acyclic vs. chordal and (F1..F9)-free.
    Forest,
    /// The three tree routes agree.
    TreeRoutes,
    /// Γ(G) connected vs. every non-trivial homogeneous set independent.
    Connectivity,
    /// Γ of an induced subgraph is the matching induced subgraph of Γ.
    Heredity,
    /// The apex construction embeds every graph in a Gallai graph.
    Embedding,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Forest,
        Check::TreeRoutes,
        Check::Connectivity,
        Check::Heredity,
        Check::Embedding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Forest => "thm1",
            Check::TreeRoutes => "thm2",
            Check::Connectivity => "prop1",
            Check::Heredity => "heredity",
            Check::Embedding => "embedding",
        }
    }

    /// Largest admissible `n_max` for the given enumeration mode.
    pub fn max_n(self, dedup: bool) -> usize {
        match (self, dedup) {
            (Check::Forest | Check::TreeRoutes | Check::Connectivity, false) => 7,
            (Check::Forest | Check::TreeRoutes | Check::Connectivity, true) => 8,
            (Check::Heredity, _) => 6,
            (Check::Embedding, _) => 5,
        }
    }

    /// The embedding check always sweeps isomorphism classes.
    fn uses_dedup(self, dedup: bool) -> bool {
        dedup || self == Check::Embedding
    }

    /// Evaluates the check on one graph. `None` means the graph lies outside
    /// the check's hypothesis and is not counted.
    pub fn examine(self, g: &Graph) -> Option<Vec<Mismatch>> {
        match self {
            Check::Forest => {
                let direct = gallai(g).expect("small graph").graph().is_forest();
                let characterization = is_gallai_forest(g).answer;
                Some(Mismatch::unless_equal(
                    g,
                    "forest",
                    None,
                    vec![("direct", direct), ("characterization", characterization)],
                ))
            }
            Check::TreeRoutes => {
                if g.n() == 0 || g.isolated_vertices().next().is_some() {
                    return None;
                }
                let answers = Route::ALL
                    .iter()
                    .map(|&r| (r.name(), is_gallai_tree(g, r).expect("hypothesis checked").answer))
                    .collect();
                Some(Mismatch::unless_equal(g, "tree", None, answers))
            }
            Check::Connectivity => {
                if g.n() == 0 || g.isolated_vertices().next().is_some() {
                    return None;
                }
                let connected = gallai(g).expect("small graph").graph().connected_components().len() <= 1;
                let independent = find_bad_homogeneous_set(g).is_none();
                Some(Mismatch::unless_equal(
                    g,
                    "gallai-connected",
                    None,
                    vec![("gallai-connected", connected), ("homogeneous-sets-independent", independent)],
                ))
            }
            Check::Heredity => {
                let n = g.n();
                let mut out = Vec::new();
                for mask in 0u32..1 << n {
                    let subset = VertexSet::new((0..n).filter(|&v| mask >> v & 1 == 1));
                    if !heredity_holds(g, &subset) {
                        out.push(Mismatch {
                            graph6: to_graph6(g),
                            question: "heredity".into(),
                            subset: Some(subset),
                            answers: vec![RouteAnswer::new("label-map", false)],
                        });
                    }
                }
                Some(out)
            }
            Check::Embedding => {
                let emb = apex_embedding(g).expect("small graph");
                let copy = emb.embedded_copy().expect("small graph");
                let exact = &copy == g;
                let isomorphic = crate::graph::is_isomorphic_small(&copy, g).unwrap_or(false);
                let answers = vec![RouteAnswer::new("label-map", exact), RouteAnswer::new("isomorphic", isomorphic)];
                Some(if exact && isomorphic {
                    Vec::new()
                } else {
                    vec![Mismatch {
                        graph6: to_graph6(g),
                        question: "embedding".into(),
                        subset: None,
                        answers,
                    }]
                })
            }
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Γ(g[S]) mapped back through the label map equals Γ(g) restricted to edges inside S.
pub fn heredity_holds(g: &Graph, subset: &VertexSet) -> bool {
    let (Ok(sub), Ok(whole)) = (g.induced_subgraph(subset), gallai(g)) else {
        return false;
    };
    let Ok(small) = gallai(&sub) else {
        return false;
    };
    let inside = whole.restrict(|e| subset.contains(e.u()) && subset.contains(e.v()));
    let members = subset.members();
    let mapped: Vec<Edge> = small
        .labels()
        .iter()
        .map(|e| Edge::new(members[e.u()], members[e.v()]))
        .collect();
    mapped == inside.labels() && small.graph() == inside.graph()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteAnswer {
    pub route: String,
    pub answer: bool,
}

impl RouteAnswer {
    fn new(route: &str, answer: bool) -> Self {
        RouteAnswer {
            route: route.into(),
            answer,
        }
    }
}

/// A graph on which the compared computations disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph6: String,
    pub question: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<VertexSet>,
    pub answers: Vec<RouteAnswer>,
}

impl Mismatch {
    fn unless_equal(g: &Graph, question: &str, subset: Option<VertexSet>, answers: Vec<(&str, bool)>) -> Vec<Mismatch> {
        if answers.windows(2).all(|w| w[0].1 == w[1].1) {
            return Vec::new();
        }
        vec![Mismatch {
            graph6: to_graph6(g),
            question: question.into(),
            subset,
            answers: answers.into_iter().map(|(r, a)| RouteAnswer::new(r, a)).collect(),
        }]
    }
}

#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub check: String,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub mismatches: Vec<Mismatch>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct Summary {
    n_max: usize,
    graphs: u64,
    mismatches: usize,
    ms: u128,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// JSON-lines: one line per mismatch, then the summary line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for m in &self.mismatches {
            out.push_str(&serde_json::to_string(m).expect("mismatches serialize"));
            out.push('\n');
        }
        out.push_str(&self.summary_json());
        out.push('\n');
        out
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string(&Summary {
            n_max: self.n_max,
            graphs: self.graphs_checked,
            mismatches: self.mismatches.len(),
            ms: self.elapsed.as_millis(),
        })
        .expect("summary serializes")
    }
}

/// Runs `examine` over every graph on `1..=n_max` vertices (labeled, or one
/// per isomorphism class with `dedup`). Work is split into fixed chunks and
/// merged in enumeration order, so the result does not depend on the number
/// of worker threads.
pub fn sweep<F>(n_max: usize, dedup: bool, examine: F) -> Result<(u64, Vec<Mismatch>), HarnessError>
where
    F: Fn(&Graph) -> Option<Vec<Mismatch>> + Sync,
{
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    let run = |graphs: &mut dyn Iterator<Item = Graph>| {
        let mut count = 0u64;
        let mut found = Vec::new();
        for g in graphs {
            if let Some(ms) = examine(&g) {
                count += 1;
                found.extend(ms);
            }
        }
        (count, found)
    };
    for n in 1..=n_max {
        let parts: Vec<(u64, Vec<Mismatch>)> = if dedup {
            canonical_codes(n)?
                .par_chunks(CHUNK as usize)
                .map(|codes| run(&mut codes.iter().map(|&c| graph_from_code(n, c))))
                .collect()
        } else {
            let total = 1u64 << pair_count(n);
            let chunks = total.div_ceil(CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let range = c * CHUNK..((c + 1) * CHUNK).min(total);
                    run(&mut range.map(|code| graph_from_code(n, code)))
                })
                .collect()
        };
        for (count, found) in parts {
            checked += count;
            mismatches.extend(found);
        }
    }
    Ok((checked, mismatches))
}

/// Runs one of the built-in checks over all graphs on `1..=n_max` vertices.
pub fn crosscheck(check: Check, n_max: usize, dedup: bool) -> Result<CrosscheckReport, HarnessError> {
    let dedup = check.uses_dedup(dedup);
    let max = check.max_n(dedup);
    if n_max > max {
        return Err(HarnessError::RangeCap {
            what: check.name(),
            n: n_max,
            max,
        });
    }
    let start = Instant::now();
    let (graphs_checked, mismatches) = sweep(n_max, dedup, |g| check.examine(g))?;
    Ok(CrosscheckReport {
        check: check.name().into(),
        n_max,
        graphs_checked,
        mismatches,
        elapsed: start.elapsed(),
    })
}

pub fn crosscheck_forest(n_max: usize) -> Result<CrosscheckReport, HarnessError> {
    crosscheck(Check::Forest, n_max, false)
}

pub fn crosscheck_tree_routes(n_max: usize) -> Result<CrosscheckReport, HarnessError> {
    crosscheck(Check::TreeRoutes, n_max, false)
}

pub fn crosscheck_connectivity(n_max: usize) -> Result<CrosscheckReport, HarnessError> {
    crosscheck(Check::Connectivity, n_max, false)
}

pub fn crosscheck_heredity(n_max: usize) -> Result<CrosscheckReport, HarnessError> {
    crosscheck(Check::Heredity, n_max, false)
}

pub fn crosscheck_embedding(n_max: usize) -> Result<CrosscheckReport, HarnessError> {
    crosscheck(Check::Embedding, n_max, true)
}

/// Re-runs `check` on the mismatch's graph and confirms the same disagreement.
pub fn reproduces(check: Check, mismatch: &Mismatch) -> bool {
    let Ok(g) = parse_graph6(&mismatch.graph6) else {
        return false;
    };
    check
        .examine(&g)
        .is_some_and(|found| found.contains(mismatch))
}
