//! graph6 reading and writing.
//!
//! Header `N(n)` is one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit big-endian bytes. The upper triangle follows column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte offset by 63 and
//! zero-padded at the end.

use crate::error::{Graph6Error, Result};
use crate::graph::Graph;

/// Optional file header some tools prepend to the first line.
pub const HEADER: &str = ">>graph6<<";

const OFFSET: u8 = 63;

fn check_byte(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - OFFSET)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Parses one graph6 string. Surrounding whitespace is not accepted; callers
/// reading files should trim lines first (see [`parse_lines`]).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty.into());
    };

    let (n, header_len) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            // 8-byte form, only needed for n >= 258048
            return Err(Graph6Error::TooLarge(258_048).into());
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                n: 0,
                expected: 4,
                found: bytes.len(),
            }
            .into());
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | check_byte(i + 1, b)? as usize;
        }
        (n, 4)
    } else {
        (check_byte(0, first)? as usize, 1)
    };
    if n > Graph::MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n).into());
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: data.len(),
        }
        .into());
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData(data.len() - expected).into());
    }

    let mut words = Vec::with_capacity(expected);
    for (i, &b) in data.iter().enumerate() {
        words.push(check_byte(header_len + i, b)?);
    }
    let pad = expected * 6 - bits;
    if pad > 0 {
        let last = words[expected - 1];
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding(pad).into());
        }
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let word = words[k / 6];
            if word >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + OFFSET);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + OFFSET);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses a graph6 file body: one graph per line, blank lines ignored, and
/// a leading `>>graph6<<` header stripped. Errors carry the 1-based line.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, crate::Error)> {
    let mut graphs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|e| (idx + 1, e))?);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn triangle() {
        // header 63 + 3 = 'B'; bits 111 padded to 111000 = 56, 63 + 56 = 'w'
        let g = parse_graph6("Bw").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(emit_graph6(&g), "Bw");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn reference_string_from_petgraph() {
        // edges a-c, a-e, b-d, d-e on five vertices encode to "DQc"
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::complete(64);
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6("").unwrap_err(), Error::Graph6(Graph6Error::Empty));
        assert!(matches!(
            parse_graph6("B").unwrap_err(),
            Error::Graph6(Graph6Error::BadLength { n: 3, expected: 1, found: 0 })
        ));
        assert_eq!(
            parse_graph6("Bww").unwrap_err(),
            Error::Graph6(Graph6Error::TrailingData(1))
        );
        assert!(matches!(
            parse_graph6("B!").unwrap_err(),
            Error::Graph6(Graph6Error::InvalidByte { offset: 1, byte: b'!' })
        ));
        // 'x' = 63 + 57 sets a padding bit for n = 3
        assert_eq!(
            parse_graph6("Bx").unwrap_err(),
            Error::Graph6(Graph6Error::NonZeroPadding(3))
        );
        assert!(matches!(
            parse_graph6("~?A?").unwrap_err(),
            Error::Graph6(Graph6Error::TooLarge(_))
        ));
    }

    #[test]
    fn file_lines() {
        let text = ">>graph6<<Bw\n\n@\n  D?? \n";
        let gs = parse_lines(text).unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2], Graph::empty(5));
        let bad = parse_lines("Bw\nB\n").unwrap_err();
        assert_eq!(bad.0, 2);
    }
}
