//! Edge-derived graphs: the line graph L(G), the Gallai graph Γ(G) and the
//! anti-Gallai graph Δ(G), plus the apex construction that places any graph
//! inside a Gallai graph.
//!
//! All three share a vertex set: vertex `i` of the derived graph is the `i`-th
//! edge of the source in canonical `(min, max)` order. Two vertices are
//! adjacent in L when their edges share an endpoint; Γ keeps those pairs whose
//! outer endpoints are non-adjacent, Δ keeps the pairs that span a triangle.

use std::fmt::Write as _;

use crate::graph::{Edge, Graph, GraphError, MAX_VERTICES};

/// A graph whose vertices are labelled by the edges of a source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: Graph,
    labels: Vec<Edge>,
    source_n: usize,
}

impl LabeledGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn labels(&self) -> &[Edge] {
        &self.labels
    }

    pub fn label(&self, vertex: usize) -> Edge {
        self.labels[vertex]
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    /// The derived vertex carrying `edge`, if it is an edge of the source.
    pub fn vertex_of(&self, edge: Edge) -> Option<usize> {
        self.labels.binary_search(&edge).ok()
    }

    /// Induced subgraph on the vertices whose labels satisfy `keep`; labels
    /// still refer to the original source vertices.
    pub fn restrict(&self, mut keep: impl FnMut(Edge) -> bool) -> LabeledGraph {
        let picked: Vec<usize> = (0..self.labels.len())
            .filter(|&i| keep(self.labels[i]))
            .collect();
        let mut graph = Graph::blank(picked.len());
        for (a, &i) in picked.iter().enumerate() {
            for (b, &j) in picked.iter().enumerate().skip(a + 1) {
                if self.graph.has_edge(i, j) {
                    graph.add_edge(a, b).expect("indices in range");
                }
            }
        }
        LabeledGraph {
            graph,
            labels: picked.iter().map(|&i| self.labels[i]).collect(),
            source_n: self.source_n,
        }
    }

    /// Graphviz rendering with each vertex annotated by its source edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for (i, e) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{e}\"];");
        }
        for e in self.graph.edges() {
            let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
        }
        out.push('}');
        out
    }
}

#[derive(Clone, Copy)]
enum Keep {
    All,
    OpenPairs,
    TrianglePairs,
}

fn derive(g: &Graph, keep: Keep) -> Result<LabeledGraph, GraphError> {
    let labels = g.edges();
    if labels.len() > MAX_VERTICES {
        return Err(GraphError::TooLarge(labels.len()));
    }
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for (idx, e) in labels.iter().enumerate() {
        incident[e.u()].push((e.v(), idx));
        incident[e.v()].push((e.u(), idx));
    }
    let mut graph = Graph::blank(labels.len());
    for around in &incident {
        for (i, &(a, ea)) in around.iter().enumerate() {
            for &(b, eb) in &around[i + 1..] {
                let wanted = match keep {
                    Keep::All => true,
                    Keep::OpenPairs => !g.has_edge(a, b),
                    Keep::TrianglePairs => g.has_edge(a, b),
                };
                if wanted {
                    graph.add_edge(ea, eb).expect("edge indices in range");
                }
            }
        }
    }
    Ok(LabeledGraph {
        graph,
        labels,
        source_n: g.n(),
    })
}

/// L(G). Fails only if G has more than [`MAX_VERTICES`] edges.
pub fn line_graph(g: &Graph) -> Result<LabeledGraph, GraphError> {
    derive(g, Keep::All)
}

/// Γ(G).
pub fn gallai(g: &Graph) -> Result<LabeledGraph, GraphError> {
    derive(g, Keep::OpenPairs)
}

/// Δ(G).
pub fn anti_gallai(g: &Graph) -> Result<LabeledGraph, GraphError> {
    derive(g, Keep::TrianglePairs)
}

/// Result of [`apex_embedding`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexEmbedding {
    pub graph: Graph,
    pub apex: usize,
}

/// Builds G on `V(h) ∪ {x}` with `x = |V(h)|` adjacent to everything and
/// `G - x` the complement of `h`. The edges `xv` then induce a copy of `h`
/// in Γ(G).
pub fn apex_embedding(h: &Graph) -> Result<ApexEmbedding, GraphError> {
    let apex = h.n();
    let mut graph = Graph::new(apex + 1)?;
    let co = h.complement();
    for e in co.edges() {
        graph.add_edge(e.u(), e.v())?;
    }
    for v in 0..apex {
        graph.add_edge(v, apex)?;
    }
    Ok(ApexEmbedding { graph, apex })
}

impl ApexEmbedding {
    /// The subgraph of Γ(G) on the edges at the apex, relabelled by `xv ↦ v`.
    pub fn embedded_copy(&self) -> Result<Graph, GraphError> {
        let apex = self.apex;
        let star = gallai(&self.graph)?.restrict(|e| e.contains(apex));
        let mut out = Graph::new(apex)?;
        for e in star.graph().edges() {
            let a = star.label(e.u()).other(apex);
            let b = star.label(e.v()).other(apex);
            out.add_edge(a, b)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic_small;

    fn claw() -> Graph {
        Graph::from_edges(4, [(0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn line_graph_examples() {
        let p3 = line_graph(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.graph(), &Graph::complete(2).unwrap());
        let star = line_graph(&claw()).unwrap();
        assert_eq!(star.graph(), &Graph::complete(3).unwrap());
        let k3 = line_graph(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.graph(), &Graph::complete(3).unwrap());
    }

    #[test]
    fn gallai_examples() {
        let k3 = gallai(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.graph(), &Graph::new(3).unwrap());
        let c5 = gallai(&Graph::cycle(5).unwrap()).unwrap();
        assert!(is_isomorphic_small(c5.graph(), &Graph::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn anti_gallai_examples() {
        let k3 = anti_gallai(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(k3.graph(), &Graph::complete(3).unwrap());
        let p3 = anti_gallai(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.graph(), &Graph::new(2).unwrap());
        assert_eq!(anti_gallai(&claw()).unwrap().graph(), &Graph::new(3).unwrap());
    }

    #[test]
    fn edgeless_source() {
        let empty = gallai(&Graph::new(4).unwrap()).unwrap();
        assert_eq!(empty.graph().n(), 0);
        assert_eq!(empty.source_n(), 4);
    }

    #[test]
    fn labels_are_canonical() {
        let g = Graph::from_edges(4, [(2, 3), (0, 2), (1, 0)]).unwrap();
        let l = line_graph(&g).unwrap();
        let labels: Vec<_> = l.labels().iter().map(Edge::endpoints).collect();
        assert_eq!(labels, vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(l.vertex_of(Edge::new(3, 2)), Some(2));
        assert_eq!(l.vertex_of(Edge::new(1, 2)), None);
    }

    #[test]
    fn apex_examples() {
        let k2 = Graph::complete(2).unwrap();
        let emb = apex_embedding(&k2).unwrap();
        assert_eq!(emb.apex, 2);
        assert_eq!(emb.graph, Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(emb.embedded_copy().unwrap(), k2);

        let two = Graph::new(2).unwrap();
        let emb = apex_embedding(&two).unwrap();
        assert_eq!(emb.graph, Graph::complete(3).unwrap());
        assert_eq!(emb.embedded_copy().unwrap(), two);

        let c5 = Graph::cycle(5).unwrap();
        let copy = apex_embedding(&c5).unwrap().embedded_copy().unwrap();
        assert!(is_isomorphic_small(&copy, &c5).unwrap());
    }

    #[test]
    fn dot_output_labels_vertices() {
        let dot = gallai(&Graph::path(3).unwrap()).unwrap().to_dot();
        assert_eq!(dot, "graph {\n  0 [label=\"0-1\"];\n  1 [label=\"1-2\"];\n  0 -- 1;\n}");
    }
}
