//! Brute-force oracles shared by the integration tests. They use only the
//! plain adjacency accessors of `Graph`, never the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gallai_core::recognition::{BlockCondition, Certificate};
use gallai_core::{Edge, Graph};
use itertools::Itertools;

pub type Pair = (usize, usize);

pub fn edge_pairs(g: &Graph) -> Vec<Pair> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        for u in 0..v {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn shared(e: Pair, f: Pair) -> Option<(usize, usize, usize)> {
    let (a, b) = e;
    let (c, d) = f;
    if a == c {
        Some((a, b, d))
    } else if a == d {
        Some((a, b, c))
    } else if b == c {
        Some((b, a, d))
    } else if b == d {
        Some((b, a, c))
    } else {
        None
    }
}

/// Adjacency of two distinct edges in L(G), Γ(G) and Δ(G).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Line,
    Gallai,
    AntiGallai,
}

pub fn related(g: &Graph, e: Pair, f: Pair, rel: Relation) -> bool {
    if e == f {
        return false;
    }
    match shared(e, f) {
        None => false,
        Some((_, x, y)) => match rel {
            Relation::Line => true,
            Relation::Gallai => !g.has_edge(x, y),
            Relation::AntiGallai => g.has_edge(x, y),
        },
    }
}

/// Edges of the derived graph as pairs of source edges, sorted.
pub fn derived_edges(g: &Graph, rel: Relation) -> BTreeSet<(Pair, Pair)> {
    let es = edge_pairs(g);
    let mut out = BTreeSet::new();
    for (i, &e) in es.iter().enumerate() {
        for &f in &es[i + 1..] {
            if related(g, e, f, rel) {
                out.insert((e, f));
            }
        }
    }
    out
}

/// Components of an abstract graph given by vertex count and edge list.
pub fn components(n: usize, edges: &[Pair]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(a, b) in edges {
            let m = label[a].min(label[b]);
            if label[a] != m || label[b] != m {
                label[a] = m;
                label[b] = m;
                changed = true;
            }
        }
        if !changed {
            return label;
        }
    }
}

/// Naive Γ(G) as an abstract graph on the sorted edge list of G.
pub fn naive_gallai(g: &Graph) -> (Vec<Pair>, Vec<Pair>) {
    let es = edge_pairs(g);
    let mut adj = Vec::new();
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if related(g, es[i], es[j], Relation::Gallai) {
                adj.push((i, j));
            }
        }
    }
    (es, adj)
}

pub fn abstract_is_forest(n: usize, edges: &[Pair]) -> bool {
    let label = components(n, edges);
    let parts = label.iter().enumerate().filter(|&(i, &l)| i == l).count();
    edges.len() + parts == n
}

pub fn abstract_is_connected(n: usize, edges: &[Pair]) -> bool {
    components(n, edges).iter().all(|&l| l == 0)
}

pub fn gallai_is_forest(g: &Graph) -> bool {
    let (es, adj) = naive_gallai(g);
    abstract_is_forest(es.len(), &adj)
}

pub fn gallai_is_tree(g: &Graph) -> bool {
    let (es, adj) = naive_gallai(g);
    !es.is_empty() && abstract_is_forest(es.len(), &adj) && abstract_is_connected(es.len(), &adj)
}

pub fn gallai_is_connected(g: &Graph) -> bool {
    let (es, adj) = naive_gallai(g);
    abstract_is_connected(es.len(), &adj)
}

/// Whether two graphs are isomorphic, by trying every bijection.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || edge_pairs(g).len() != edge_pairs(h).len() {
        return false;
    }
    (0..n).permutations(n).any(|p| {
        (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) == h.has_edge(p[i], p[j])))
    })
}

/// Smallest graph6-order code over all relabellings.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    (0..n)
        .permutations(n)
        .map(|p| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | u64::from(g.has_edge(p[i], p[j]));
                }
            }
            code
        })
        .min()
        .unwrap_or(0)
}

pub fn induced(g: &Graph, vs: &[usize]) -> Graph {
    let mut h = Graph::new(vs.len()).unwrap();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if g.has_edge(vs[i], vs[j]) {
                h.add_edge(i, j).unwrap();
            }
        }
    }
    h
}

/// Whether `g` has an induced cycle of length at least four, by checking
/// every vertex subset.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.n();
    (4..=n).any(|k| {
        (0..n).combinations(k).any(|vs| {
            let h = induced(g, &vs);
            (0..k).all(|v| (0..k).filter(|&u| h.has_edge(u, v)).count() == 2)
                && abstract_is_connected(k, &edge_pairs(&h))
        })
    })
}

pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    k >= 4
        && cycle.iter().all(|&v| v < g.n())
        && cycle.iter().all_unique()
        && (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                g.has_edge(cycle[i], cycle[j]) == consecutive
            })
        })
}

pub fn preserves(g: &Graph, p: &Graph, map: &[usize]) -> bool {
    map.len() == p.n()
        && map.iter().all(|&x| x < g.n())
        && map.iter().all_unique()
        && (0..p.n()).all(|i| (i + 1..p.n()).all(|j| p.has_edge(i, j) == g.has_edge(map[i], map[j])))
}

pub fn homogeneous(g: &Graph, set: &[usize]) -> bool {
    (0..g.n()).filter(|x| !set.contains(x)).all(|x| {
        let seen = set.iter().filter(|&&u| g.has_edge(x, u)).count();
        seen == 0 || seen == set.len()
    })
}

/// Every homogeneous set with `2 <= |U| <= n - 1`.
pub fn nontrivial_homogeneous_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    (2..n)
        .flat_map(|k| (0..n).combinations(k))
        .filter(|s| homogeneous(g, s))
        .collect()
}

pub fn has_edge_inside(g: &Graph, set: &[usize]) -> bool {
    set.iter().tuple_combinations().any(|(&a, &b)| g.has_edge(a, b))
}

/// Components of G - v restricted to the remaining vertices.
fn components_without(g: &Graph, v: usize) -> Vec<usize> {
    let edges: Vec<Pair> = edge_pairs(g).into_iter().filter(|&(a, b)| a != v && b != v).collect();
    components(g.n(), &edges)
}

/// Blocks as vertex sets: two edges share a block unless some vertex
/// separates them.
pub fn blocks(g: &Graph) -> Vec<BTreeSet<usize>> {
    let es = edge_pairs(g);
    let without: Vec<Vec<usize>> = (0..g.n()).map(|v| components_without(g, v)).collect();
    let side = |e: Pair, v: usize| if e.0 == v { without[v][e.1] } else { without[v][e.0] };
    let mut out: Vec<(Pair, BTreeSet<usize>)> = Vec::new();
    for &e in &es {
        let home = out
            .iter_mut()
            .find(|(rep, _)| (0..g.n()).all(|v| side(*rep, v) == side(e, v)));
        match home {
            Some((_, set)) => {
                set.insert(e.0);
                set.insert(e.1);
            }
            None => out.push((e, BTreeSet::from([e.0, e.1]))),
        }
    }
    out.into_iter().map(|(_, set)| set).collect()
}

pub fn gem() -> Graph {
    // A path 0-1-2-3 with 4 adjacent to all of it.
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap()
}

/// The six-vertex exception of the block characterization: a triangle
/// 1-2-4 with a pendant triangle on each side.
pub fn f8_minus() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (5, 1), (1, 4), (4, 2)],
    )
    .unwrap()
}

/// Re-checks a certificate from first principles.
pub fn certificate_holds(g: &Graph, cert: &Certificate) -> Result<(), String> {
    let ok = |cond: bool, what: &str| if cond { Ok(()) } else { Err(what.to_string()) };
    match cert {
        Certificate::Ok => Err("no certificate for a negative answer".into()),
        Certificate::ChordlessCycle { cycle } => ok(is_induced_cycle(g, cycle), "cycle is not induced"),
        Certificate::PatternEmbedding { pattern, map } => {
            ok(preserves(g, pattern.graph(), map), "map does not preserve the pattern")
        }
        Certificate::NonIndependentHomogeneousSet { set, edge } => {
            let s = set.members();
            ok(s.len() >= 2 && s.len() < g.n(), "set is trivial")?;
            ok(s.contains(&edge.u()) && s.contains(&edge.v()), "edge outside the set")?;
            ok(g.has_edge(edge.u(), edge.v()), "witness is not an edge")?;
            ok(homogeneous(g, s), "set is not homogeneous")
        }
        Certificate::GallaiCycle { cycle } => {
            let pairs: Vec<Pair> = cycle.iter().map(Edge::endpoints).collect();
            ok(pairs.len() >= 3 && pairs.iter().all_unique(), "too short")?;
            ok(pairs.iter().all(|&(a, b)| b < g.n() && g.has_edge(a, b)), "not edges")?;
            ok(
                (0..pairs.len()).all(|i| related(g, pairs[i], pairs[(i + 1) % pairs.len()], Relation::Gallai)),
                "consecutive edges are not Gallai-adjacent",
            )
        }
        Certificate::GallaiDisconnection { first, second } => {
            let (es, adj) = naive_gallai(g);
            let a = es.iter().position(|&e| e == first.endpoints()).ok_or("first is not an edge")?;
            let b = es.iter().position(|&e| e == second.endpoints()).ok_or("second is not an edge")?;
            let label = components(es.len(), &adj);
            ok(label[a] != label[b], "edges are Gallai-connected")
        }
        Certificate::BlockViolation { block, condition, vertex } => {
            ok(abstract_is_connected(g.n(), &edge_pairs(g)), "graph is disconnected")?;
            ok(!isomorphic(g, &f8_minus()), "graph is the six-vertex exception")?;
            let all = blocks(g);
            let b: BTreeSet<usize> = block.iter().collect();
            ok(all.contains(&b), "not a block")?;
            let in_blocks = |v: usize| all.iter().filter(|s| s.contains(&v)).count();
            let members: Vec<usize> = b.iter().copied().collect();
            let h = induced(g, &members);
            let is_k2 = members.len() == 2;
            let is_k3 = members.len() == 3 && edge_pairs(&h).len() == 3;
            let is_gem = members.len() == 5 && isomorphic(&h, &gem());
            let cuts = members.iter().filter(|&&v| in_blocks(v) >= 2).count();
            match condition {
                BlockCondition::BlockShape => ok(!(is_k2 || is_k3 || is_gem), "block has an allowed shape"),
                BlockCondition::TriangleCutVertices => ok(is_k3 && cuts != 2, "triangle is fine"),
                BlockCondition::GemCutVertices => ok(is_gem && cuts != 1, "gem is fine"),
                BlockCondition::GemCutVertexDegree => {
                    let c = vertex.ok_or("missing vertex")?;
                    let inner = members.iter().filter(|&&x| g.has_edge(c, x)).count();
                    ok(is_gem && b.contains(&c) && in_blocks(c) >= 2 && inner != 2, "gem cut-vertex is fine")
                }
                BlockCondition::CutVertexBlockCount => {
                    let c = vertex.ok_or("missing vertex")?;
                    ok(b.contains(&c) && in_blocks(c) > 2, "cut-vertex is in at most two blocks")
                }
                BlockCondition::CutVertexDegree => {
                    let c = vertex.ok_or("missing vertex")?;
                    let degree = (0..g.n()).filter(|&x| g.has_edge(c, x)).count();
                    ok(b.contains(&c) && in_blocks(c) >= 2 && degree > 3, "cut-vertex degree is fine")
                }
            }
        }
    }
}
