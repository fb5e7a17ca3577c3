//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one bit row per vertex so that adjacency tests are a
//! single word lookup and neighbourhood intersections are word-wise ANDs.

mod edge_list;
mod graph6;
mod iso;

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub use edge_list::{parse_edge_list, to_edge_list, EdgeListError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use iso::{is_isomorphic_small, IsoError, ISO_MAX_VERTICES};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph on {0} vertices exceeds the limit of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// An unordered pair of distinct vertices, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint the two edges have in common, if they share exactly one.
    pub fn shared_endpoint(&self, other: &Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        if other.contains(self.u) {
            Some(self.u)
        } else if other.contains(self.v) {
            Some(self.v)
        } else {
            None
        }
    }

    /// The endpoint that is not `x`. Panics if `x` is not an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            assert_eq!(x, self.v, "{x} is not an endpoint of {self}");
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Position of `v` inside the set, i.e. its index after relabelling.
    pub fn rank(&self, v: usize) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the set bits of a bit row.
pub(crate) struct Bits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Bits<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Bits {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Self::blank(n))
    }

    /// Caller guarantees `n <= MAX_VERTICES`.
    pub(crate) fn blank(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Ok(Graph::new(n)?.complement())
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = !self.has_edge(u, v);
        self.set(u, v);
        self.set(v, u);
        Ok(fresh)
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let present = u != v && self.has_edge(u, v);
        if present {
            self.rows[u * self.words + v / 64] &= !(1u64 << (v % 64));
            self.rows[v * self.words + u / 64] &= !(1u64 << (u % 64));
        }
        Ok(present)
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    /// Adjacency test. Panics if either vertex is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Bits::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges, sorted by `(min endpoint, max endpoint)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.row(v).iter().all(|&w| w == 0))
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in ascending order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(&bad) = s.members().iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let members = s.members();
        let mut out = Graph::blank(members.len());
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    out.set(i, j);
                    out.set(j, i);
                }
            }
        }
        Ok(out)
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::blank(self.n);
        for v in 0..self.n {
            let base = v * self.words;
            for w in 0..self.words {
                let mut mask = !self.rows[base + w];
                if w == self.words - 1 && self.n % 64 != 0 {
                    mask &= (1u64 << (self.n % 64)) - 1;
                }
                out.rows[base + w] = mask;
            }
            out.rows[base + v / 64] &= !(1u64 << (v % 64));
        }
        out
    }

    /// The graph whose vertex `i` is vertex `order[i]` of `self`.
    /// `order` must be a permutation of `0..n`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.n, "permutation length mismatch");
        let mut out = Graph::blank(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(order[i], order[j]) {
                    out.set(i, j);
                    out.set(j, i);
                }
            }
        }
        out
    }

    /// Maximal connected vertex sets, each sorted, listed by minimum element.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            out.push(VertexSet::new(comp));
        }
        out
    }

    /// At most one component. The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Vertices of some cycle, in cyclic order, or `None` for a forest.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if y == parent[x] {
                        continue;
                    }
                    if depth[y] == usize::MAX {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        stack.push(y);
                    } else {
                        return Some(tree_cycle(&parent, &depth, x, y));
                    }
                }
            }
        }
        None
    }
}

/// Closes the cycle formed by the non-tree edge `xy` and the tree paths to
/// their common ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(Edge::to_string).collect();
        write!(f, "Graph(n={}, [{}])", self.n, edges.join(" "))
    }
}
