//! graph6 codec.
//!
//! A graph6 string is `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte (most significant first), each byte offset by 63. `N(n)` is
//! one byte for `n <= 62`, `126` plus three bytes for `n <= 258047`, and
//! `126 126` plus six bytes beyond that.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";
const BIAS: u8 = 63;

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Error::Malformed { offset, byte: b }),
        None => Err(Error::Length(format!("input ends inside the size field at offset {offset}"))),
    }
}

/// Returns `(n, bytes consumed)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first != 63 {
        return Ok((first as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for i in 0..width {
        n = n << 6 | sextet(bytes, start + i)? as u64;
    }
    Ok((n as usize, start + width))
}

/// Decodes one graph6 line, with or without the `>>graph6<<` header.
/// A single trailing newline is tolerated.
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let mut bytes = input.strip_prefix(HEADER).unwrap_or(input);
    let base = input.len() - bytes.len();
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    let at = |e: Error| match e {
        Error::Malformed { offset, byte } => Error::Malformed { offset: offset + base, byte },
        other => other,
    };
    let (n, head) = parse_size(bytes).map_err(at)?;
    if n > MAX_VERTICES {
        return Err(Error::Size(format!("graph6 declares {n} vertices, limit is {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let payload = &bytes[head..];
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(Error::Length(format!(
            "{n} vertices need {expected} payload bytes, found {}",
            payload.len()
        )));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = sextet(payload, k / 6).map_err(|e| match e {
                Error::Malformed { offset, byte } => Error::Malformed { offset: offset + base + head, byte },
                other => other,
            })?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(u, v);
            }
            k += 1;
        }
    }
    if let Some(&last) = payload.last() {
        let offset = base + head + payload.len() - 1;
        if !(63..=126).contains(&last) {
            return Err(Error::Malformed { offset, byte: last });
        }
        let pad = expected * 6 - bits;
        if (last - BIAS) & ((1u8 << pad) - 1) != 0 {
            return Err(Error::Padding { offset });
        }
    }
    Ok(g)
}

/// Encodes `g` without header or newline. Padding bits are zero.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        let width = if n <= 258_047 { 3 } else {
            out.push(126);
            6
        };
        for i in (0..width).rev() {
            out.push(((n >> (6 * i)) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    out
}
