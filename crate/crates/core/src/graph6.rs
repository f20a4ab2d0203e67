//! graph6 text encoding: 6-bit chunks offset by 63, MSB-first bits of the
//! upper triangle in column order, padded with zeros.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#x} at position {pos} is outside the printable range 63..=126")]
    NonPrintable { pos: usize, byte: u8 },
    #[error("truncated size header")]
    TruncatedHeader,
    #[error("payload has {got} bytes, expected {expected} for n = {n}")]
    WrongPayloadLength { n: u64, expected: usize, got: usize },
    #[error("graph on {0} vertices does not fit in this build")]
    TooLarge(u64),
}

const OFFSET: u8 = 63;
const LONG_MARKER: u8 = 126;

/// Decodes one graph6 line into a fully active graph.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_MARKER).contains(&b) {
            return Err(Graph6Error::NonPrintable { pos, byte: b });
        }
    }
    let (n, header_len) = parse_size(bytes)?;
    let n_usize = usize::try_from(n).map_err(|_| Graph6Error::TooLarge(n))?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = usize::try_from(bit_count.div_ceil(6)).map_err(|_| Graph6Error::TooLarge(n))?;
    let payload = &bytes[header_len..];
    if payload.len() != expected {
        return Err(Graph6Error::WrongPayloadLength {
            n,
            expected,
            got: payload.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    'cols: for j in 1..n_usize {
        for i in 0..j {
            let byte = payload[bit_idx / 6];
            if (byte - OFFSET) >> (5 - bit_idx % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_idx += 1;
            if bit_idx as u64 == bit_count {
                break 'cols;
            }
        }
    }
    Ok(Graph::new(n_usize, &edges).expect("decoded edges are in range"))
}

fn parse_size(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes[0] != LONG_MARKER {
        return Ok(((bytes[0] - OFFSET) as u64, 1));
    }
    if bytes.len() >= 2 && bytes[1] != LONG_MARKER {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0u64, |acc, &b| acc << 6 | (b - OFFSET) as u64);
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Graph6Error::TruncatedHeader);
    }
    let n = bytes[2..8]
        .iter()
        .fold(0u64, |acc, &b| acc << 6 | (b - OFFSET) as u64);
    Ok((n, 8))
}

/// Encodes a graph as one graph6 line. Masked graphs are compacted first
/// (active labels in ascending order).
pub fn write_graph6(g: &Graph) -> String {
    let g = if g.vertex_count() == g.label_count() {
        g.clone()
    } else {
        g.compacted()
    };
    let n = g.vertex_count();
    assert!((n as u64) < 1 << 36, "graph6 caps at 2^36 - 1 vertices");
    let mut out = Vec::new();
    write_size(&mut out, n as u64);
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn write_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258047 {
        out.push(LONG_MARKER);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(LONG_MARKER);
        out.push(LONG_MARKER);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + OFFSET);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_vertex_graphs() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("A?").unwrap(), Graph::edgeless(2));
        assert_eq!(write_graph6(&Graph::complete(2)), "A_");
        assert_eq!(write_graph6(&Graph::edgeless(2)), "A?");
    }

    #[test]
    fn malformed_inputs_rejected() {
        // n = 5 needs exactly 2 payload bytes
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::WrongPayloadLength { n: 5, expected: 2, got: 1 })
        );
        assert_eq!(
            parse_graph6("D???"),
            Err(Graph6Error::WrongPayloadLength { n: 5, expected: 2, got: 3 })
        );
        assert_eq!(parse_graph6("D??").unwrap(), Graph::edgeless(5));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A_%"),
            Err(Graph6Error::NonPrintable { pos: 2, byte: b'%' })
        );
        assert_eq!(
            parse_graph6("A__"),
            Err(Graph6Error::WrongPayloadLength { n: 2, expected: 1, got: 2 })
        );
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::TruncatedHeader));
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(write_graph6(&Graph::edgeless(0)), "?");
        assert_eq!(write_graph6(&Graph::edgeless(1)), "@");
        assert_eq!(parse_graph6("?").unwrap(), Graph::edgeless(0));
        assert_eq!(parse_graph6("@").unwrap(), Graph::edgeless(1));
    }

    #[test]
    fn long_size_header() {
        let g = Graph::edgeless(63);
        let s = write_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn masked_graphs_compact_on_write() {
        // deleting 2 from C5 leaves edges 01, 34, 40; compaction maps
        // labels {0,1,3,4} to {0,1,2,3}
        let c5 = Graph::cycle(5);
        let masked = c5.delete_vertex(2).unwrap();
        let expected = Graph::new(4, &[(0, 1), (2, 3), (3, 0)]).unwrap();
        assert_eq!(write_graph6(&masked), write_graph6(&expected));
    }

    #[test]
    fn roundtrip_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..80 {
            let n = rng.gen_range(0..12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let s = write_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            assert_eq!(write_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
