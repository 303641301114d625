//! graph6 text encoding: one graph per line, upper triangle in column order,
//! six bits per printable byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order encodable with the single-byte header.
pub const GRAPH6_MAX_N: usize = 62;

/// Encodes a graph as a graph6 ASCII string (no trailing newline).
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::SizeOverflow(n, GRAPH6_MAX_N));
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | g.has_edge(row, col) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    Ok(String::from_utf8(out).unwrap())
}

/// Decodes a graph6 line. Leading `>>graph6<<` headers are not supported;
/// surrounding whitespace is trimmed.
pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::BadGraph6("empty input".into()));
    }
    let n = match bytes[0] {
        b @ 63..=125 => (b - 63) as usize,
        b => return Err(Error::BadGraph6(format!("bad order byte {b}"))),
    };
    if n == 0 || n > GRAPH6_MAX_N {
        return Err(Error::BadGraph6(format!("unsupported order {n}")));
    }
    let nbits = n * (n - 1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::BadGraph6(format!(
            "length {} does not match order {n} (want {expect})",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::BadGraph6(format!("bad payload byte {b}")));
        }
        let mut chunk = b - 63;
        for k in (0..6).rev() {
            if idx >= nbits {
                if chunk & ((1 << (k + 1)) - 1) != 0 {
                    return Err(Error::BadGraph6("nonzero padding bits".into()));
                }
                break;
            }
            if (chunk >> k) & 1 == 1 {
                let (row, col) = pair_at(idx);
                g.add_edge(row, col);
            }
            chunk &= !(1 << k);
            idx += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-major upper-triangle enumeration:
/// index 0 -> (0,1), 1 -> (0,2), 2 -> (1,2), 3 -> (0,3), ...
fn pair_at(idx: usize) -> (usize, usize) {
    let mut col = 1;
    let mut base = 0;
    while base + col <= idx {
        base += col;
        col += 1;
    }
    (idx - base, col)
}

/// Parses a multi-line graph6 corpus, ignoring blank lines.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

pub fn encode_lines(graphs: &[Graph]) -> Result<String> {
    let mut s = String::new();
    for g in graphs {
        s.push_str(&encode(g)?);
        s.push('\n');
    }
    Ok(s)
}
