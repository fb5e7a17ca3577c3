//! Biconnected components and the block-cut tree.

use super::patterns::Pattern;
use super::RecognitionError;
use crate::graph::{is_isomorphic_small, Edge, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    blocks: Vec<VertexSet>,
    cut_vertices: VertexSet,
    incidence: Vec<Vec<usize>>,
}

impl BlockCutTree {
    /// Blocks ordered by their smallest edge.
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn cut_vertices(&self) -> &VertexSet {
        &self.cut_vertices
    }

    /// Cut-vertices lying in block `index`, ascending.
    pub fn cut_vertices_in(&self, index: usize) -> &[usize] {
        &self.incidence[index]
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_containing(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.blocks[i].contains(v))
            .collect()
    }
}

/// Block decomposition of a connected graph (Hopcroft–Tarjan with an edge
/// stack, run iteratively).
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, RecognitionError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    if n == 1 {
        return Ok(BlockCutTree {
            blocks: vec![VertexSet::new([0])],
            cut_vertices: VertexSet::default(),
            incidence: vec![Vec::new()],
        });
    }

    let adj: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut next_child = vec![0usize; n];
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut found: Vec<(Edge, VertexSet)> = Vec::new();
    let mut clock = 0;

    if n > 0 {
        disc[0] = clock;
        low[0] = clock;
        clock += 1;
        let mut stack = vec![0usize];
        while let Some(&v) = stack.last() {
            if next_child[v] < adj[v].len() {
                let w = adj[v][next_child[v]];
                next_child[v] += 1;
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push(Edge::new(v, w));
                    stack.push(w);
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&u) = stack.last() else { break };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let closing = Edge::new(u, v);
                let mut members = Vec::new();
                let mut smallest = closing;
                while let Some(e) = edge_stack.pop() {
                    members.extend([e.u(), e.v()]);
                    smallest = smallest.min(e);
                    if e == closing {
                        break;
                    }
                }
                found.push((smallest, VertexSet::new(members)));
            }
        }
    }

    found.sort();
    let blocks: Vec<VertexSet> = found.into_iter().map(|(_, b)| b).collect();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for v in b.iter() {
            count[v] += 1;
        }
    }
    let cut_vertices = VertexSet::new((0..n).filter(|&v| count[v] >= 2));
    let incidence = blocks
        .iter()
        .map(|b| b.iter().filter(|&v| count[v] >= 2).collect())
        .collect();
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        incidence,
    })
}

/// The block shapes allowed in a graph whose Gallai graph is a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockShape {
    Edge,
    Triangle,
    Gem,
}

/// Shape of `block` as an induced subgraph of `g`, if it is one of K2, K3, gem.
pub fn classify_block(g: &Graph, block: &VertexSet) -> Option<BlockShape> {
    let sub = g.induced_subgraph(block).ok()?;
    match (sub.n(), sub.edge_count()) {
        (2, 1) => Some(BlockShape::Edge),
        (3, 3) => Some(BlockShape::Triangle),
        (5, 7) if is_isomorphic_small(&sub, Pattern::Gem.graph()).ok()? => Some(BlockShape::Gem),
        _ => None,
    }
}
