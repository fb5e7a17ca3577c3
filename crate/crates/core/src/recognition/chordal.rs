//! Chordality via lexicographic breadth-first search.
//!
//! The reverse of a Lex-BFS visit order is a perfect elimination ordering
//! exactly when the graph is chordal. When the ordering check fails at a
//! vertex `v` with parent `p` and a second earlier neighbour `w` not adjacent
//! to `p`, a shortest `p`–`w` path avoiding the rest of `N[v]` closes a
//! chordless cycle through `v`.

use std::collections::VecDeque;

use super::certificate::{Certificate, Verdict};
use crate::graph::Graph;

/// Lex-BFS visit order. Ties are broken towards the smallest vertex index.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut classes: Vec<Vec<usize>> = if n > 0 { vec![(0..n).collect()] } else { Vec::new() };
    while !classes.is_empty() {
        let v = classes[0].remove(0);
        order.push(v);
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes {
            let (near, far): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&x| g.has_edge(v, x));
            for part in [near, far] {
                if !part.is_empty() {
                    refined.push(part);
                }
            }
        }
        classes = refined;
    }
    order
}

/// Outcome of checking a candidate elimination ordering.
enum OrderCheck {
    Perfect,
    /// `v` is adjacent to both `p` and `w`, which are not adjacent.
    Broken { v: usize, p: usize, w: usize },
}

fn check_lex_order(g: &Graph, visit: &[usize]) -> OrderCheck {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in visit.iter().enumerate() {
        pos[v] = i;
    }
    for &v in visit.iter().rev() {
        let earlier: Vec<usize> = g.neighbors(v).filter(|&x| pos[x] < pos[v]).collect();
        let Some(&p) = earlier.iter().max_by_key(|&&x| pos[x]) else {
            continue;
        };
        let mut rest: Vec<usize> = earlier.iter().copied().filter(|&x| x != p).collect();
        rest.sort_by_key(|&x| pos[x]);
        if let Some(&w) = rest.iter().find(|&&w| !g.has_edge(p, w)) {
            return OrderCheck::Broken { v, p, w };
        }
    }
    OrderCheck::Perfect
}

/// A perfect elimination ordering, if `g` is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let visit = lex_bfs(g);
    match check_lex_order(g, &visit) {
        OrderCheck::Perfect => Some(visit.into_iter().rev().collect()),
        OrderCheck::Broken { .. } => None,
    }
}

/// Cycle `v, p, ..., w` where the inner part is a shortest `p`–`w` path
/// avoiding `N[v] \ {p, w}`.
fn cycle_through(g: &Graph, v: usize, p: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for x in g.neighbors(v) {
        blocked[x] = x != p && x != w;
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([p]);
    blocked[p] = true;
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut cur = w;
            while cur != p {
                cur = prev[cur];
                path.push(cur);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if !blocked[y] {
                blocked[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

fn find_chordless_cycle(g: &Graph, hint: (usize, usize, usize)) -> Vec<usize> {
    let (v, p, w) = hint;
    if let Some(c) = cycle_through(g, v, p, w) {
        return c;
    }
    // Any chordless cycle C and any v on it give such a path, so this scan
    // cannot come up empty on a non-chordal graph.
    for v in g.vertices() {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &p) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(p, w) {
                    if let Some(c) = cycle_through(g, v, p, w) {
                        return c;
                    }
                }
            }
        }
    }
    unreachable!("elimination check failed on a graph without chordless cycles")
}

/// Chordality with a chordless-cycle certificate on failure.
pub fn is_chordal(g: &Graph) -> Verdict {
    let visit = lex_bfs(g);
    match check_lex_order(g, &visit) {
        OrderCheck::Perfect => Verdict::yes(),
        OrderCheck::Broken { v, p, w } => Verdict::no(Certificate::ChordlessCycle {
            cycle: find_chordless_cycle(g, (v, p, w)),
        }),
    }
}
