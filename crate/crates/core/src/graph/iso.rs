use thiserror::Error;

use super::Graph;

/// Hard cap on the order of graphs handed to [`is_isomorphic_small`].
pub const ISO_MAX_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("isomorphism test is limited to {ISO_MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

/// Exact isomorphism test for small graphs by backtracking over
/// degree-compatible vertex assignments.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool, IsoError> {
    for x in [g, h] {
        if x.n() > ISO_MAX_VERTICES {
            return Err(IsoError::TooLarge(x.n()));
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let deg_g: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let deg_h: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    let (mut sg, mut sh) = (deg_g.clone(), deg_h.clone());
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }

    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    Ok(extend(g, h, &deg_g, &deg_h, 0, &mut image, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    deg_g: &[usize],
    deg_h: &[usize],
    next: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if next == g.n() {
        return true;
    }
    for cand in h.vertices() {
        if used[cand] || deg_h[cand] != deg_g[next] {
            continue;
        }
        let consistent = (0..next).all(|prev| g.has_edge(prev, next) == h.has_edge(image[prev], cand));
        if !consistent {
            continue;
        }
        image[next] = cand;
        used[cand] = true;
        if extend(g, h, deg_g, deg_h, next + 1, image, used) {
            return true;
        }
        used[cand] = false;
    }
    false
}
