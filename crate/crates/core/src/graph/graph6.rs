//! graph6 encoding.
//!
//! Layout: the order `n` (one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three bytes carrying 18 bits), then the upper triangle bits
//! `x(i, j)` for `j = 1..n`, `i < j`, column by column, packed six bits per
//! byte (most significant first), each byte offset by 63, zero padded.

use super::{Graph, GraphError};

const BIAS: u8 = 63;
const MAX_ORDER: usize = 258_047;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(i, format!("byte {b} outside 63..=126")));
        }
    }

    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated order field"));
        }
        if bytes[1] == 126 {
            return Err(err(1, "orders above 258047 are not supported"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= 62 {
            return Err(err(0, "long order form used for a small order"));
        }
        (n, 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(
            bytes.len(),
            format!("truncated: expected {expected} bytes for order {n}"),
        ));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing bytes after adjacency data"));
    }

    let body = &bytes[header..];
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if bits % 6 != 0 {
        let last = body.len() - 1;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if (body[last] - BIAS) & pad_mask != 0 {
            return Err(err(header + last, "nonzero padding bits"));
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)
                    .expect("graph6 bits address distinct pairs");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 string (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 order limited to {MAX_ORDER}");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
