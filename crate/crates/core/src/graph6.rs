//! The graph6 text encoding.
//!
//! A record is a size field followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ..`), packed six
//! bits per printable byte with an offset of 63 and zero padding at the end.
//! Orders up to 62 use a single size byte; 63 and above use `~` followed by
//! three six-bit bytes.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Optional header some tools write at the start of a file.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const LONG_SIZE_MARK: u8 = 126;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses a single graph6 record. Surrounding line terminators and an
/// optional `>>graph6<<` header are accepted; anything else beyond the
/// payload is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let mut end = bytes.len();
    while end > pos && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }

    let sixbits = |at: usize| -> Result<u8, GraphError> {
        if at >= end {
            return Err(err(at, "unexpected end of record"));
        }
        match bytes[at] {
            b @ BIAS..=LONG_SIZE_MARK => Ok(b - BIAS),
            b => Err(err(
                at,
                format!("byte 0x{b:02x} outside the printable range 63..=126"),
            )),
        }
    };

    if pos >= end {
        return Err(err(pos, "empty record"));
    }
    let n = if bytes[pos] == LONG_SIZE_MARK {
        if bytes.get(pos + 1) == Some(&LONG_SIZE_MARK) {
            return Err(err(pos + 1, "eight-byte size field is not supported"));
        }
        let mut n = 0usize;
        for i in 1..=3 {
            n = (n << 6) | sixbits(pos + i)? as usize;
        }
        pos += 4;
        n
    } else {
        let v = sixbits(pos)? as usize;
        pos += 1;
        v
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for b in 0..byte_count {
        let at = pos + b;
        let value = sixbits(at)?;
        for shift in (0..6).rev() {
            let set = value >> shift & 1 == 1;
            if bit < bit_count {
                if set {
                    let (i, j) = pair_of_bit(bit);
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            } else if set {
                return Err(err(at, "nonzero padding bit"));
            }
            bit += 1;
        }
    }
    let tail = pos + byte_count;
    if tail < end {
        return Err(err(tail, "trailing bytes after payload"));
    }
    Graph::from_adjacency(adj)
}

/// Maps a payload bit index to its vertex pair `(i, j)`, `i < j`.
fn pair_of_bit(bit: usize) -> (usize, usize) {
    // column j holds bits j(j-1)/2 .. j(j+1)/2
    let mut j = 1;
    while (j + 1) * j / 2 <= bit {
        j += 1;
    }
    (bit - j * (j - 1) / 2, j)
}

/// Encodes `g` as a graph6 record without header or newline.
pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut out = Vec::with_capacity(4 + (n * n / 12) + 1);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_SIZE_MARK);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
