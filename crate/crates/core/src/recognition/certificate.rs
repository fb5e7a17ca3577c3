//! Verdicts and the certificates that back them. Every certificate can be
//! re-checked against the input graph without trusting the recognizer that
//! produced it.

use serde::Serialize;
use thiserror::Error;

use super::blocks::{block_cut_tree, classify_block, BlockShape};
use super::homogeneous::is_homogeneous;
use super::patterns::Pattern;
use crate::graph::{Edge, Graph, VertexSet};
use crate::operators::gallai;

/// Which condition of the block characterization a block or cut-vertex breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockCondition {
    /// Block is not K2, K3 or a gem.
    BlockShape,
    /// Cut-vertex lies in more than two blocks.
    CutVertexBlockCount,
    /// Cut-vertex has degree above three.
    CutVertexDegree,
    /// Triangle block without exactly two cut-vertices.
    TriangleCutVertices,
    /// Gem block without exactly one cut-vertex.
    GemCutVertices,
    /// The gem's cut-vertex does not have degree two inside the gem.
    GemCutVertexDegree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Certificate {
    ChordlessCycle {
        cycle: Vec<usize>,
    },
    PatternEmbedding {
        pattern: Pattern,
        map: Vec<usize>,
    },
    NonIndependentHomogeneousSet {
        set: VertexSet,
        edge: Edge,
    },
    GallaiCycle {
        cycle: Vec<Edge>,
    },
    GallaiDisconnection {
        first: Edge,
        second: Edge,
    },
    BlockViolation {
        block: VertexSet,
        condition: BlockCondition,
        #[serde(skip_serializing_if = "Option::is_none")]
        vertex: Option<usize>,
    },
    Ok,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid {kind} certificate: {reason}")]
pub struct CertificateError {
    pub kind: &'static str,
    pub reason: String,
}

fn fail<T>(kind: &'static str, reason: impl Into<String>) -> Result<T, CertificateError> {
    Err(CertificateError {
        kind,
        reason: reason.into(),
    })
}

fn all_distinct<T: Ord + Clone>(items: &[T]) -> bool {
    let mut sorted = items.to_vec();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ChordlessCycle { .. } => "chordless-cycle",
            Certificate::PatternEmbedding { .. } => "pattern-embedding",
            Certificate::NonIndependentHomogeneousSet { .. } => "non-independent-homogeneous-set",
            Certificate::GallaiCycle { .. } => "gallai-cycle",
            Certificate::GallaiDisconnection { .. } => "gallai-disconnection",
            Certificate::BlockViolation { .. } => "block-violation",
            Certificate::Ok => "ok",
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Certificate::Ok)
    }

    /// Re-checks the certificate against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        let kind = self.kind();
        match self {
            Certificate::Ok => Ok(()),
            Certificate::ChordlessCycle { cycle } => validate_chordless_cycle(g, cycle),
            Certificate::PatternEmbedding { pattern, map } => {
                let p = pattern.graph();
                if map.len() != p.n() {
                    return fail(kind, format!("map has {} entries for {} pattern vertices", map.len(), p.n()));
                }
                if map.iter().any(|&x| x >= g.n()) || !all_distinct(map) {
                    return fail(kind, "map is not an injection into the vertex set");
                }
                for i in 0..p.n() {
                    for j in i + 1..p.n() {
                        if p.has_edge(i, j) != g.has_edge(map[i], map[j]) {
                            return fail(kind, format!("pattern pair {i}{j} is not preserved"));
                        }
                    }
                }
                Ok(())
            }
            Certificate::NonIndependentHomogeneousSet { set, edge } => {
                if set.len() < 2 || set.len() >= g.n() {
                    return fail(kind, format!("set of size {} is trivial in a graph on {}", set.len(), g.n()));
                }
                if set.iter().any(|v| v >= g.n()) {
                    return fail(kind, "set member out of range");
                }
                if !set.contains(edge.u()) || !set.contains(edge.v()) || !g.has_edge(edge.u(), edge.v()) {
                    return fail(kind, format!("{edge} is not an edge inside the set"));
                }
                if !is_homogeneous(g, set) {
                    return fail(kind, "set is not homogeneous");
                }
                Ok(())
            }
            Certificate::GallaiCycle { cycle } => {
                if cycle.len() < 3 || !all_distinct(cycle) {
                    return fail(kind, "need at least three distinct edges");
                }
                for e in cycle {
                    if e.v() >= g.n() || !g.has_edge(e.u(), e.v()) {
                        return fail(kind, format!("{e} is not an edge"));
                    }
                }
                for (i, e) in cycle.iter().enumerate() {
                    let f = &cycle[(i + 1) % cycle.len()];
                    let Some(c) = e.shared_endpoint(f) else {
                        return fail(kind, format!("{e} and {f} share no endpoint"));
                    };
                    if g.has_edge(e.other(c), f.other(c)) {
                        return fail(kind, format!("{e} and {f} span a triangle"));
                    }
                }
                Ok(())
            }
            Certificate::GallaiDisconnection { first, second } => {
                if first == second {
                    return fail(kind, "the two edges coincide");
                }
                let gamma = gallai(g).map_err(|e| CertificateError {
                    kind,
                    reason: e.to_string(),
                })?;
                let (Some(a), Some(b)) = (gamma.vertex_of(*first), gamma.vertex_of(*second)) else {
                    return fail(kind, "labels are not edges of the graph");
                };
                let together = gamma
                    .graph()
                    .connected_components()
                    .iter()
                    .any(|c| c.contains(a) && c.contains(b));
                if together {
                    return fail(kind, format!("{first} and {second} are connected in the Gallai graph"));
                }
                Ok(())
            }
            Certificate::BlockViolation {
                block,
                condition,
                vertex,
            } => validate_block_violation(g, block, *condition, *vertex),
        }
    }
}

fn validate_chordless_cycle(g: &Graph, cycle: &[usize]) -> Result<(), CertificateError> {
    const KIND: &str = "chordless-cycle";
    let k = cycle.len();
    if k < 4 {
        return fail(KIND, format!("length {k} is below four"));
    }
    if cycle.iter().any(|&v| v >= g.n()) || !all_distinct(cycle) {
        return fail(KIND, "vertices out of range or repeated");
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return fail(KIND, format!("pair {}{} breaks the induced cycle", cycle[i], cycle[j]));
            }
        }
    }
    Ok(())
}

fn validate_block_violation(
    g: &Graph,
    block: &VertexSet,
    condition: BlockCondition,
    vertex: Option<usize>,
) -> Result<(), CertificateError> {
    const KIND: &str = "block-violation";
    let Ok(tree) = block_cut_tree(g) else {
        return fail(KIND, "graph is not connected");
    };
    let Some(index) = tree.blocks().iter().position(|b| b == block) else {
        return fail(KIND, format!("{block} is not a block"));
    };
    let shape = classify_block(g, block);
    let cuts = tree.cut_vertices_in(index);
    let broken = match condition {
        BlockCondition::BlockShape => shape.is_none(),
        BlockCondition::TriangleCutVertices => shape == Some(BlockShape::Triangle) && cuts.len() != 2,
        BlockCondition::GemCutVertices => shape == Some(BlockShape::Gem) && cuts.len() != 1,
        BlockCondition::GemCutVertexDegree => match vertex {
            Some(c) if shape == Some(BlockShape::Gem) && cuts == [c] => {
                block.iter().filter(|&x| g.has_edge(c, x)).count() != 2
            }
            _ => false,
        },
        BlockCondition::CutVertexBlockCount => match vertex {
            Some(c) if cuts.contains(&c) => tree.blocks_containing(c).len() > 2,
            _ => false,
        },
        BlockCondition::CutVertexDegree => match vertex {
            Some(c) if cuts.contains(&c) => g.degree(c) > 3,
            _ => false,
        },
    };
    if broken {
        Ok(())
    } else {
        fail(KIND, format!("{block} does not violate {condition:?}"))
    }
}

/// A yes/no answer together with the evidence for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub answer: bool,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            answer: true,
            certificate: Certificate::Ok,
        }
    }

    pub fn no(certificate: Certificate) -> Self {
        debug_assert!(!certificate.is_ok());
        Verdict {
            answer: false,
            certificate,
        }
    }

    /// Checks that the certificate kind fits the answer and re-validates it.
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        if self.answer != self.certificate.is_ok() {
            return fail(self.certificate.kind(), format!("does not match answer {}", self.answer));
        }
        self.certificate.validate(g)
    }
}
