//! graph6 encoding: 6-bit big-endian packing of the upper triangle in column
//! order, each sextet offset by 63.

use super::Graph;
use crate::bitset::MAX_VERTICES;
use thiserror::Error;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Errors carry the byte offset within the record (header excluded).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed length prefix at offset {offset}")]
    Length { offset: usize },
    #[error("order {n} at offset {offset} is outside supported range 1..={MAX_VERTICES}")]
    Order { n: usize, offset: usize },
    #[error("edge section at offset {offset} has {found} bytes, expected {expected}")]
    BodyLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    TrailingBits { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, Graph6Error> {
    let b = bytes[offset];
    if !(BIAS..=126).contains(&b) {
        return Err(Graph6Error::InvalidByte { offset, byte: b });
    }
    Ok((b - BIAS) as u32)
}

impl Graph {
    /// Parses one graph6 record, with or without the `>>graph6<<` header.
    /// Surrounding whitespace is ignored.
    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        let text = text.trim();
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Graph6Error::Empty);
        }

        let (n, body_start) = if bytes[0] == 126 {
            if bytes.len() < 4 {
                return Err(Graph6Error::Length { offset: 0 });
            }
            if bytes[1] == 126 {
                // 8-byte form: only used for n > 258047.
                return Err(Graph6Error::Order {
                    n: usize::MAX,
                    offset: 1,
                });
            }
            let mut n = 0u32;
            for i in 1..4 {
                n = (n << 6) | sextet(bytes, i)?;
            }
            if n < 63 {
                return Err(Graph6Error::Length { offset: 0 });
            }
            (n as usize, 4)
        } else {
            (sextet(bytes, 0)? as usize, 1)
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(Graph6Error::Order { n, offset: 0 });
        }

        let nbits = n * (n - 1) / 2;
        let expected = nbits.div_ceil(6);
        let body = &bytes[body_start..];
        if body.len() != expected {
            return Err(Graph6Error::BodyLength {
                offset: body_start,
                expected,
                found: body.len(),
            });
        }

        let mut g = Graph::new(n).expect("order checked");
        let mut k = 0usize;
        for offset in body_start..bytes.len() {
            let val = sextet(bytes, offset)?;
            for shift in (0..6).rev() {
                let bit = (val >> shift) & 1;
                if k < nbits {
                    if bit == 1 {
                        let (i, j) = upper_index(k);
                        g.add_edge(i, j).expect("indices in range");
                    }
                } else if bit == 1 {
                    return Err(Graph6Error::TrailingBits { offset });
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// graph6 bytes for this labeling (no canonical relabeling, no header).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
        if n <= 62 {
            out.push(n as u8 + BIAS);
        } else {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + BIAS);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
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
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

/// Maps a position in the column-order upper triangle to `(i, j)`, `i < j`.
fn upper_index(k: usize) -> (usize, usize) {
    // Column j holds positions j(j-1)/2 .. j(j+1)/2.
    let mut j = ((((8 * k + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}
