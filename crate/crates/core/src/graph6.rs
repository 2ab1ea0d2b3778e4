//! The graph6 text format (one graph per line).
//!
//! Layout: `N(n) R(x)` where `N` is the vertex count in one, four or eight
//! printable bytes and `R` packs the upper triangle column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) six bits per byte, big-endian,
//! zero-padded, each byte offset by 63.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const OFFSET: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;
const HEADER: &[u8] = b">>graph6<<";

pub fn encode(graph: &Graph) -> String {
    let n = graph.n();
    assert!(n <= LONG_MAX, "graph too large for graph6");
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = graph.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(row.contains(i));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize> {
    match bytes.get(at) {
        Some(&c) if (OFFSET..=126).contains(&c) => Ok((c - OFFSET) as usize),
        Some(&c) => Err(Error::graph6(at, format!("byte 0x{c:02x} outside 63..=126"))),
        None => Err(Error::graph6(at, "unexpected end of input")),
    }
}

fn read_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    if bytes.get(1) == Some(&126) {
        let mut n = 0;
        for at in 2..8 {
            n = (n << 6) | sextet(bytes, at)?;
        }
        return Ok((n, 8));
    }
    let mut n = 0;
    for at in 1..4 {
        n = (n << 6) | sextet(bytes, at)?;
    }
    Ok((n, 4))
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode(text: &[u8]) -> Result<Graph> {
    let body_start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = text.len();
    while end > body_start && matches!(text[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &text[body_start..end];
    let at = |i: usize| body_start + i;

    let (n, header_len) = read_size(bytes).map_err(|e| shift(e, body_start))?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::graph6(
            at(bytes.len().min(expected)),
            format!("expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }

    let mut builder = GraphBuilder::new(n);
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = header_len + k / 6;
            let value = sextet(bytes, byte).map_err(|e| shift(e, body_start))?;
            if value >> (5 - k % 6) & 1 == 1 {
                builder.insert_unchecked(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = expected - 1;
        let value = sextet(bytes, last).map_err(|e| shift(e, body_start))?;
        let pad = 6 - bits % 6;
        if value & ((1 << pad) - 1) != 0 {
            return Err(Error::graph6(at(last), "nonzero padding bits"));
        }
    }
    Ok(builder.build())
}

fn shift(err: Error, by: usize) -> Error {
    match err {
        Error::Graph6 { offset, message } => Error::Graph6 {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

pub fn decode_str(text: &str) -> Result<Graph> {
    decode(text.as_bytes())
}

/// Reads every non-blank line of `reader` as a graph6 string. Parse errors
/// carry the 1-based line number in their message.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::graph6(0, format!("line {}: {e}", lineno + 1)))?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let g = decode_str(trimmed).map_err(|e| match e {
            Error::Graph6 { offset, message } => Error::Graph6 {
                offset,
                message: format!("line {}: {message}", lineno + 1),
            },
            other => other,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // Reference strings from the format description.
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        let path = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&path), "DQc");
    }

    #[test]
    fn round_trips_small() {
        for g in [Graph::empty(0), Graph::complete(4), Graph::cycle(7)] {
            assert_eq!(decode_str(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn medium_header() {
        let g = Graph::cycle(100);
        let s = encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode_str(&s).unwrap(), g);
    }

    #[test]
    fn long_header_decodes() {
        // n = 63 written in the eight-byte form.
        let mut s = b"~~?????".to_vec();
        s.push(b'~');
        let body = vec![b'?'; (63 * 62 / 2_usize).div_ceil(6)];
        s.extend_from_slice(&body);
        assert_eq!(decode(&s).unwrap().n(), 63);
    }

    #[test]
    fn accepts_header_and_newline() {
        assert_eq!(decode(b">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(
            decode(b"C~~"),
            Err(Error::graph6(2, "expected 2 bytes for n = 4, found 3"))
        );
        assert!(matches!(decode(b"C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode(b"C\x20"), Err(Error::Graph6 { offset: 1, .. })));
        // n = 3 has three data bits; the low three bits of the byte are padding.
        assert!(matches!(decode(b"B@"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(decode(b""), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn read_all_skips_blank_lines() {
        let text = "C~\n\nA_\n";
        let graphs = read_all(text.as_bytes()).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[1].edge_count(), 1);
        let err = read_all("C~\nC~~\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }
}
