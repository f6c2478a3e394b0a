//! The graph6 text format: `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte
//! (value + 63), big-endian, zero padded.

use thiserror::Error;

use super::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("truncated vertex-count prefix")]
    TruncatedSize,
    #[error("graph6 line declares {0} vertices; at most {MAX_VERTICES} supported")]
    TooLarge(usize),
    #[error("expected {expected} adjacency bytes for n={n}, found {found}")]
    LengthMismatch { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    NonzeroPadding,
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes `g` as a single graph6 line without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, Graph6Error> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::BadByte { byte: b, offset });
    }
    Ok((b - 63) as usize)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored. Padding bits must be zero, so that
/// `encode_graph6(decode_graph6(s)?) == s` for every accepted `s`.
pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)?, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedSize);
        }
        let mut n = 0;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i)?;
        }
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let mut n = 0;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)?;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - pos;
    if found != expected {
        return Err(Graph6Error::LengthMismatch { n, expected, found });
    }
    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    let (mut i, mut j) = (0, 1);
    while k < bits {
        let word = sextet(bytes, pos)?;
        pos += 1;
        for b in (0..6).rev() {
            if k == bits {
                if word & ((1 << (b + 1)) - 1) != 0 {
                    return Err(Graph6Error::NonzeroPadding);
                }
                break;
            }
            if word >> b & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_rows(rows).expect("decoded rows are symmetric"))
}

/// Decodes every non-blank line of a graph6 file; the optional header is
/// tolerated on any line. Errors carry the 1-based line number.
pub fn decode_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| decode_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}
