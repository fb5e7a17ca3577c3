//! Exhaustive enumeration of small graphs.
//!
//! A graph on `n <= 11` vertices is identified with its adjacency code: the
//! upper-triangle bits in graph6 order (pairs `01, 02, 12, 03, …`) read as a
//! binary number with the first pair most significant. Codes therefore sort
//! the same way graph6 strings of equal order do.

use super::HarnessError;
use crate::graph::Graph;

/// Largest order for labeled enumeration.
pub const LABELED_MAX_N: usize = 8;
/// Largest order for isomorphism-reduced enumeration.
pub const DEDUP_MAX_N: usize = 9;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph with adjacency code `code`. Needs `pair_count(n) <= 64`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    assert!(total <= 64, "codes only cover graphs on at most 11 vertices");
    let mut g = Graph::blank(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    g
}

pub fn code_of(g: &Graph) -> u64 {
    let n = g.n();
    assert!(pair_count(n) <= 64, "codes only cover graphs on at most 11 vertices");
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(i, j));
        }
    }
    code
}

/// All graphs on `n` vertices, either every labeled graph in ascending code
/// order, or (with `dedup`) one representative per isomorphism class: the
/// labelling with the smallest code, in ascending order.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph> + Send>, HarnessError> {
    if dedup {
        Ok(Box::new(canonical_codes(n)?.into_iter().map(move |c| graph_from_code(n, c))))
    } else {
        if n > LABELED_MAX_N {
            return Err(HarnessError::RangeCap {
                what: "labeled enumeration",
                n,
                max: LABELED_MAX_N,
            });
        }
        let total = 1u64 << pair_count(n);
        Ok(Box::new((0..total).map(move |c| graph_from_code(n, c))))
    }
}

/// Canonical codes of all graphs on `n` vertices, ascending.
///
/// Canonical codes form a tree under "add the least significant missing
/// edge", rooted at the complete graph: filling that bit of a minimal code
/// yields another minimal code. Children are therefore obtained by deleting
/// an edge below the lowest missing pair and keeping only canonical results
/// (orderly generation).
pub fn canonical_codes(n: usize) -> Result<Vec<u64>, HarnessError> {
    if n > DEDUP_MAX_N {
        return Err(HarnessError::RangeCap {
            what: "isomorphism-reduced enumeration",
            n,
            max: DEDUP_MAX_N,
        });
    }
    let total = pair_count(n);
    let full = if total == 0 { 0 } else { u64::MAX >> (64 - total) };
    let mut out = Vec::new();
    let mut stack = vec![full];
    while let Some(code) = stack.pop() {
        out.push(code);
        let lowest_gap = (!code & full).trailing_zeros() as usize;
        let limit = lowest_gap.min(total);
        for bit in 0..limit {
            let child = code & !(1u64 << bit);
            if is_canonical(n, child) {
                stack.push(child);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether no relabelling of the graph has a smaller code.
pub fn is_canonical(n: usize, code: u64) -> bool {
    if n <= 1 {
        return true;
    }
    let g = graph_from_code(n, code);
    let rows: Vec<u16> = g
        .vertices()
        .map(|v| g.neighbors(v).fold(0u16, |acc, x| acc | 1 << x))
        .collect();
    let mut placed = Vec::with_capacity(n);
    let mut used = 0u16;
    !Canon { n, rows: &rows, code }.finds_smaller(&mut placed, &mut used)
}

struct Canon<'a> {
    n: usize,
    rows: &'a [u16],
    code: u64,
}

impl Canon<'_> {
    fn target_bit(&self, i: usize, j: usize) -> bool {
        let total = pair_count(self.n);
        let k = pair_count(j) + i;
        self.code >> (total - 1 - k) & 1 == 1
    }

    /// Places vertices at positions `placed.len()..` and reports whether some
    /// completion yields a strictly smaller code than the target.
    fn finds_smaller(&self, placed: &mut Vec<usize>, used: &mut u16) -> bool {
        let j = placed.len();
        if j == self.n {
            return false;
        }
        for v in 0..self.n {
            if *used >> v & 1 == 1 {
                continue;
            }
            let mut order = std::cmp::Ordering::Equal;
            for (i, &u) in placed.iter().enumerate() {
                let have = self.rows[u] >> v & 1 == 1;
                let want = self.target_bit(i, j);
                if have != want {
                    order = have.cmp(&want);
                    break;
                }
            }
            match order {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Equal => {
                    placed.push(v);
                    *used |= 1 << v;
                    let smaller = self.finds_smaller(placed, used);
                    placed.pop();
                    *used &= !(1 << v);
                    if smaller {
                        return true;
                    }
                }
            }
        }
        false
    }
}
