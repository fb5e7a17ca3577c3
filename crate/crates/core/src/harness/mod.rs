//! Exhaustive small-graph enumeration and the cross-check sweeps built on it.

mod crosscheck;
mod enumerate;

use thiserror::Error;

pub use crosscheck::{
    crosscheck, crosscheck_embedding, crosscheck_heredity, crosscheck_connectivity, crosscheck_forest,
    crosscheck_tree_routes, heredity_holds, reproduces, sweep, Check, CrosscheckReport, Mismatch,
    RouteAnswer,
};
pub use enumerate::{
    canonical_codes, code_of, enumerate_graphs, graph_from_code, is_canonical, pair_count,
    DEDUP_MAX_N, LABELED_MAX_N,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{what} supports at most {max} vertices, asked for {n}")]
    RangeCap { what: &'static str, n: usize, max: usize },
}
