//! Line graphs, Gallai graphs and anti-Gallai graphs, with certified
//! recognition of the graphs whose Gallai graph is a forest or a tree.
//!
//! The Gallai graph Γ(G) has the edges of G as vertices; two of them are
//! adjacent when they share an endpoint and their other endpoints are not
//! adjacent. [`recognition`] decides "Γ(G) is a forest" and "Γ(G) is a tree"
//! without building Γ(G), and [`harness`] checks those deciders against the
//! direct construction on every small graph.

pub mod graph;
pub mod harness;
pub mod operators;
pub mod recognition;

pub use graph::{parse_edge_list, parse_graph6, to_graph6, Edge, Graph, GraphError, VertexSet};
pub use operators::{anti_gallai, apex_embedding, gallai, line_graph, ApexEmbedding, LabeledGraph};
pub use recognition::{
    is_chordal, is_gallai_forest, is_gallai_tree, is_gallai_tree_structural, Certificate, Pattern,
    Route, Verdict,
};
