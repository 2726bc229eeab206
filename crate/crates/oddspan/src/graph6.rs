//! graph6 byte format, bit-exact.
//!
//! Layout: a size header (byte `63 + n` for `n <= 62`, otherwise byte 126
//! followed by three 6-bit chunks of `n`, high chunk first), then the upper
//! adjacency triangle in column-major order — bits x(0,1), x(0,2), x(1,2),
//! x(0,3), ... — packed big-endian into 6-bit chunks. Each chunk is stored as
//! the byte `chunk + 63` and the final chunk is zero-padded.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    MalformedHeader(u8),
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex cap")]
    TooManyVertices(usize),
    #[error("body byte {byte:#04x} at offset {offset} outside 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("body has {got} bytes, expected {expected} for order {n}")]
    LengthMismatch { n: usize, expected: usize, got: usize },
    #[error("padding bits in the final chunk are nonzero")]
    TrailingBits,
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph as graph6 bytes (printable ASCII).
pub fn graph6_encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + if n > 1 { body_len(n) } else { 0 });
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            chunk = (chunk << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (chunk << (6 - filled)));
    }
    out
}

/// Encodes a graph as a graph6 string.
pub fn graph6_string(g: &Graph) -> String {
    String::from_utf8(graph6_encode(g)).expect("graph6 bytes are ASCII")
}

/// Decodes graph6 bytes back into a graph. Round-trips bit-for-bit with
/// [`graph6_encode`].
pub fn graph6_decode(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = match bytes {
        [rest @ .., b'\n'] => rest,
        all => all,
    };
    let (&first, mut rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    let n = if first == 126 {
        if rest.len() < 3 {
            return Err(Graph6Error::MalformedHeader(first));
        }
        let mut n = 0usize;
        for i in 0..3 {
            let b = rest[i];
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::MalformedHeader(b));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        rest = &rest[3..];
        // n <= 62 must use the short header
        if n <= 62 {
            return Err(Graph6Error::MalformedHeader(first));
        }
        n
    } else if (63..126).contains(&first) {
        (first - 63) as usize
    } else {
        return Err(Graph6Error::MalformedHeader(first));
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let expected = if n > 1 { body_len(n) } else { 0 };
    if rest.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            n,
            expected,
            got: rest.len(),
        });
    }
    let total_bits = n.saturating_sub(1) * n / 2;
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = rest[bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    byte,
                    offset: bit_index / 6,
                });
            }
            let chunk = byte - 63;
            if chunk >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit_index += 1;
            if bit_index == total_bits {
                break 'outer;
            }
        }
    }
    // zero padding in the final chunk
    if total_bits % 6 != 0 {
        let last = *rest.last().unwrap();
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::InvalidByte {
                byte: last,
                offset: rest.len() - 1,
            });
        }
        let pad = 6 - total_bits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Graph::from_edges(n, &edges).map_err(|_| Graph6Error::MalformedHeader(first))
}
