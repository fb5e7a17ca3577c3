//! Homogeneous sets (modules): vertex sets that every outside vertex sees
//! either completely or not at all.

use crate::graph::{Edge, Graph, VertexSet};

pub fn is_homogeneous(g: &Graph, set: &VertexSet) -> bool {
    g.vertices().filter(|&x| !set.contains(x)).all(|x| {
        let seen = set.iter().filter(|&u| g.has_edge(x, u)).count();
        seen == 0 || seen == set.len()
    })
}

/// The smallest homogeneous set containing `seed`, grown by repeatedly adding
/// the lowest-indexed outside vertex that sees part but not all of the set.
pub fn homogeneous_closure(g: &Graph, seed: &[usize]) -> VertexSet {
    let n = g.n();
    let mut inside = vec![false; n];
    // Number of neighbours each vertex has inside the set.
    let mut seen_inside = vec![0usize; n];
    let mut size = 0;
    let mut pending: Vec<usize> = seed.to_vec();
    loop {
        for v in pending.drain(..) {
            if !inside[v] {
                inside[v] = true;
                size += 1;
                for y in g.neighbors(v) {
                    seen_inside[y] += 1;
                }
            }
        }
        match (0..n).find(|&x| !inside[x] && seen_inside[x] > 0 && seen_inside[x] < size) {
            Some(x) => pending.push(x),
            None => break,
        }
    }
    VertexSet::new((0..n).filter(|&v| inside[v]))
}

/// A non-trivial homogeneous set that contains an edge, with that edge.
///
/// Edges are scanned in canonical order and the first one whose closure is a
/// proper subset of the vertices is reported. Every homogeneous set holding
/// an edge `uv` contains the closure of `{u, v}`, so an empty result means
/// all non-trivial homogeneous sets are independent.
pub fn find_bad_homogeneous_set(g: &Graph) -> Option<(VertexSet, Edge)> {
    g.edges().into_iter().find_map(|e| {
        let set = homogeneous_closure(g, &[e.u(), e.v()]);
        (set.len() < g.n()).then_some((set, e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::patterns::Pattern;

    #[test]
    fn triangle_has_one() {
        let (set, edge) = find_bad_homogeneous_set(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(set, VertexSet::new([0, 1]));
        assert_eq!(edge, Edge::new(0, 1));
    }

    #[test]
    fn p4_and_f8_minus_have_none() {
        assert_eq!(find_bad_homogeneous_set(&Graph::path(4).unwrap()), None);
        assert_eq!(find_bad_homogeneous_set(Pattern::F8Minus.graph()), None);
    }

    #[test]
    fn closure_grows_to_module() {
        // Path 0-1-2-3: the closure of {1, 2} must swallow 0 and then 3.
        let p4 = Graph::path(4).unwrap();
        assert_eq!(homogeneous_closure(&p4, &[1, 2]), VertexSet::all(4));
        // In K1,3 plus a pendant on a leaf the two plain leaves are twins.
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(homogeneous_closure(&g, &[1, 2]), VertexSet::new([1, 2]));
        assert!(is_homogeneous(&g, &VertexSet::new([1, 2])));
        assert!(!is_homogeneous(&g, &VertexSet::new([1, 3])));
    }

    #[test]
    fn two_vertex_edge_is_trivial() {
        assert_eq!(find_bad_homogeneous_set(&Graph::complete(2).unwrap()), None);
    }
}
