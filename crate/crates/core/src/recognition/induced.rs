//! Induced-subgraph search for small fixed patterns.

use super::RecognitionError;
use crate::graph::{Bits, Graph};

/// Largest pattern accepted by [`find_induced_pattern`].
pub const PATTERN_MAX_VERTICES: usize = 8;

/// Finds an injective map `V(p) -> V(g)` preserving adjacency and
/// non-adjacency. Pattern vertices are assigned in index order and host
/// vertices tried in ascending order, so the returned image tuple is the
/// lexicographically least one.
pub fn find_induced_pattern(g: &Graph, p: &Graph) -> Result<Option<Vec<usize>>, RecognitionError> {
    let k = p.n();
    if k > PATTERN_MAX_VERTICES {
        return Err(RecognitionError::PatternTooLarge(k));
    }
    if k > g.n() {
        return Ok(None);
    }
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    let words = g.words();
    let full_last = match g.n() % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    };
    let pattern_degree: Vec<usize> = p.vertices().map(|v| p.degree(v)).collect();
    let host_degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();

    let mut search = Search {
        g,
        p,
        words,
        full_last,
        pattern_degree,
        host_degree,
        map: Vec::with_capacity(k),
        masks: vec![0; k * words],
    };
    Ok(search.extend().then_some(search.map))
}

struct Search<'a> {
    g: &'a Graph,
    p: &'a Graph,
    words: usize,
    full_last: u64,
    pattern_degree: Vec<usize>,
    host_degree: Vec<usize>,
    map: Vec<usize>,
    masks: Vec<u64>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let i = self.map.len();
        if i == self.p.n() {
            return true;
        }
        let words = self.words;
        for w in 0..words {
            let mut m = if w + 1 == words { self.full_last } else { u64::MAX };
            for (j, &x) in self.map.iter().enumerate() {
                let row = self.g.row(x)[w];
                m &= if self.p.has_edge(i, j) { row } else { !row };
                if x / 64 == w {
                    m &= !(1u64 << (x % 64));
                }
            }
            self.masks[i * words + w] = m;
        }
        let candidates: Vec<usize> = Bits::new(&self.masks[i * words..(i + 1) * words])
            .filter(|&x| self.host_degree[x] >= self.pattern_degree[i])
            .collect();
        for x in candidates {
            self.map.push(x);
            if self.extend() {
                return true;
            }
            self.map.pop();
        }
        false
    }
}
