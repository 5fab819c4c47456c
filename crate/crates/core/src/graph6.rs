//! graph6 codec (McKay's format), bit-exact.
//!
//! Layout: a size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, zero-padded, each group offset by 63.
//! The writer emits the one-byte prefix only (`n <= 62`); the parser also
//! accepts the four-byte prefix `~ b1 b2 b3`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the writer accepts.
pub const SHORT_FORM_MAX: usize = 62;
const LONG_FORM_MAX: usize = 258_047;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(err(offset, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(err(
            offset,
            format!("byte 0x{b:02x} is outside the printable range 63..=126"),
        )),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(err(1, "eight-byte size prefix is not supported"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        if n <= SHORT_FORM_MAX {
            return Err(err(0, format!("four-byte size prefix used for n = {n}")));
        }
        (n, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    debug_assert!(n <= LONG_FORM_MAX);

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    if bytes.len() < pos + body_len {
        return Err(err(
            bytes.len(),
            format!("truncated body: expected {body_len} bytes after the size prefix"),
        ));
    }
    if bytes.len() > pos + body_len {
        return Err(err(
            pos + body_len,
            "trailing bytes after the encoded graph",
        ));
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut consumed = 0usize;
    for _ in 0..body_len {
        let group = sextet(bytes, pos)?;
        for shift in (0..6).rev() {
            let bit = group >> shift & 1;
            if consumed < bits {
                if bit == 1 {
                    edges.push((i, j));
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
                consumed += 1;
            } else if bit == 1 {
                return Err(err(pos, "nonzero padding bits"));
            }
        }
        pos += 1;
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_FORM_MAX {
        return Err(Error::UnsupportedSize {
            n,
            max: SHORT_FORM_MAX,
        });
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
