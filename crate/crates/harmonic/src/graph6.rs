//! graph6 interchange format, short form (n <= 62).
//!
//! Layout: one header byte `n + 63`, then the upper-triangle adjacency
//! bits in column-major order ((0,1), (0,2), (1,2), (0,3), ...) packed six
//! per byte, most significant bit first, each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_GRAPH6_N: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("header byte 0x{byte:02x} at offset 0 is not a short-form order")]
    BadHeader { byte: u8 },
    #[error("order {n} exceeds short-form graph6 limit {MAX_GRAPH6_N}")]
    UnsupportedOrder { n: usize },
    #[error("truncated bit-vector: need {expected} body bytes, found {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("trailing garbage at byte offset {offset}")]
    TrailingGarbage { offset: usize },
    #[error("body byte 0x{byte:02x} at offset {offset} outside graph6 range")]
    BadBodyByte { byte: u8, offset: usize },
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Packs upper-triangle bits (column-major, MSB first) into a graph6 string.
pub(crate) fn pack_graph6(n: usize, bit: impl Fn(usize, usize) -> bool) -> String {
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc: u8 = 0;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(bit(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    Ok(pack_graph6(n, |i, j| g.has_edge(i, j)))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let header = *bytes.first().ok_or(Graph6Error::Empty)?;
    if header == b'~' {
        // long-form marker; orders beyond 62 are out of scope
        return Err(Graph6Error::UnsupportedOrder { n: 63 });
    }
    if !(63..=63 + MAX_GRAPH6_N as u8).contains(&header) {
        return Err(Graph6Error::BadHeader { byte: header });
    }
    let n = (header - 63) as usize;
    let expected = body_len(n);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            actual: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            offset: 1 + expected,
        });
    }
    let mut g = Graph::new(n);
    let mut cursor = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[cursor / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::BadBodyByte {
                    byte,
                    offset: 1 + cursor / 6,
                });
            }
            let bit = (byte - 63) >> (5 - cursor % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j).expect("fresh edge slots");
            }
            cursor += 1;
        }
    }
    // bytes after the last data bit may carry nonzero padding from sloppy
    // writers; accept them, but still validate their range
    if expected > 0 {
        let last = body[expected - 1];
        if !(63..=126).contains(&last) {
            return Err(Graph6Error::BadBodyByte {
                byte: last,
                offset: expected,
            });
        }
    }
    Ok(g)
}
