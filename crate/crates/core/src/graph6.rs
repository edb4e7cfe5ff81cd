//! graph6 reading and writing for orders 1..=32.
//!
//! A record is one byte `n + 63` followed by the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits per byte (most
//! significant first), each byte offset by 63. The final byte is zero padded.

use std::io::BufRead;

use crate::error::{Error, Graph6Error};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (position, &byte) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { position, byte });
        }
    }
    if head == 126 {
        // long-form order prefix; only used for n >= 63
        return Err(Graph6Error::UnsupportedOrder { order: 63 });
    }
    let n = (head - OFFSET) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder { order: n });
    }
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { extra: data.len() - expected });
    }

    let mut g = Graph::empty(n).expect("order checked above");
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = data[k / 6] - OFFSET;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Reads one graph per non-empty line. An optional `>>graph6<<` header is skipped.
/// Errors carry the 1-based line number.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>, Error> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let mut line = line.trim_end_matches(['\r', '\n']);
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| {
            Error::Io(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("line {}: {e}", i + 1),
            ))
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_records() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("C?").unwrap(), Graph::empty(4).unwrap());
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(emit_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()), "A_");
    }

    #[test]
    fn five_vertex_reference() {
        // edges a-c, a-e, b-d, d-e encode to "DQc" in the reference encoder
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn errors_are_distinct() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::TrailingData { extra: 1 }));
        assert_eq!(parse_graph6("D"), Err(Graph6Error::Truncated { expected: 2, found: 0 }));
        assert_eq!(parse_graph6("C\x01"), Err(Graph6Error::ByteOutOfRange { position: 1, byte: 1 }));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::UnsupportedOrder { order: 0 }));
        assert!(matches!(parse_graph6("`"), Err(Graph6Error::UnsupportedOrder { order: 33 })));
        // order 2 has one data bit; anything below it is padding
        assert_eq!(parse_graph6("A@"), Err(Graph6Error::NonZeroPadding));
    }

    #[test]
    fn order_32_round_trip() {
        let mut g = Graph::empty(32).unwrap();
        for v in 0..31 {
            g.add_edge(v, v + 1);
        }
        g.add_edge(0, 31);
        let s = emit_graph6(&g);
        assert_eq!(s.len(), 1 + 496usize.div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn reads_lines() {
        let text = ">>graph6<<C~\n\n@\r\nA?\n";
        let gs = read_graph6_lines(text.as_bytes()).unwrap();
        assert_eq!(gs.len(), 3);
        assert!(read_graph6_lines("C~\nxx\n".as_bytes()).is_err());
    }
}
