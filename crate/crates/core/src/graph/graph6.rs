//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte.

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("malformed size header at offset {offset}: {reason}")]
    BadHeader { offset: usize, reason: &'static str },
    #[error("graph6 data ends at offset {offset}, expected {expected} bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing garbage at offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=LONG_HEADER).contains(&b) => Ok(u32::from(b - BIAS)),
        Some(&b) => Err(Graph6Error::ByteOutOfRange { offset, byte: b }),
        None => Err(Graph6Error::Truncated {
            offset,
            expected: offset + 1,
        }),
    }
}

fn header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != LONG_HEADER {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    if bytes.get(1) == Some(&LONG_HEADER) {
        return Err(Graph6Error::BadHeader {
            offset: 1,
            reason: "eight-byte headers are not supported",
        });
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadHeader {
            offset: bytes.len(),
            reason: "four-byte header is cut short",
        });
    }
    let mut n = 0usize;
    for offset in 1..4 {
        n = (n << 6) | sextet(bytes, offset)? as usize;
    }
    if n < 63 {
        return Err(Graph6Error::BadHeader {
            offset: 0,
            reason: "four-byte header used for fewer than 63 vertices",
        });
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::BadHeader {
            offset: 0,
            reason: "vertex count exceeds the supported limit",
        });
    }
    Ok((n, 4))
}

/// Decodes one graph6 string. Surrounding whitespace is not accepted; trim first.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (n, start) = header(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let end = start + data_len;
    if let Some(offset) = (start..bytes.len().min(end)).find(|&i| sextet(bytes, i).is_err()) {
        return Err(Graph6Error::ByteOutOfRange {
            offset,
            byte: bytes[offset],
        });
    }
    if bytes.len() < end {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: end,
        });
    }
    if bytes.len() > end {
        return Err(Graph6Error::TrailingGarbage { offset: end });
    }

    let mut g = Graph::blank(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(i, j);
                g.set(j, i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = bytes[end - 1] - BIAS;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: end - 1 });
        }
    }
    Ok(g)
}

/// Encodes `g` with the shortest admissible size header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
