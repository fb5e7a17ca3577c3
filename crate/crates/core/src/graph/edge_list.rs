//! Plain-text edge lists: a vertex count on the first line, then one `u v`
//! pair per line. Blank lines and `#` comments are ignored.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn parse_index(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::Syntax {
        line,
        message: format!("expected a vertex index, found {token:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let n = parse_index(tokens.next().unwrap_or_default(), header_line)?;
    if tokens.next().is_some() {
        return Err(EdgeListError::Syntax {
            line: header_line,
            message: "the first line must hold only the vertex count".into(),
        });
    }
    let mut g = Graph::new(n).map_err(|source| EdgeListError::Graph {
        line: header_line,
        source,
    })?;

    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(EdgeListError::Syntax {
                line,
                message: format!("expected two vertex indices, found {}", tokens.len()),
            });
        };
        let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
        if let Some(vertex) = [u, v].into_iter().find(|&x| x >= n) {
            return Err(EdgeListError::OutOfRange { line, vertex, n });
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        g.add_edge(u, v)
            .map_err(|source| EdgeListError::Graph { line, source })?;
    }
    Ok(g)
}

/// Inverse of [`parse_edge_list`], listing edges in canonical order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}
