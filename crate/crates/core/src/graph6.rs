//! graph6 encoding (single-byte order header, n <= 62).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits
//! per byte, most significant bit first, each group offset by 63. Unused bits
//! of the final byte are zero.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order expressible with a one-byte header.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("multi-byte order headers (n > {MAX_ORDER}) are not supported")]
    UnsupportedOrder,
    #[error("graph of order {0} exceeds the graph6 limit of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("expected {expected} data bytes for order {n}, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    if head == 126 {
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = usize::from(head - 63);
    let expected = data_len(n);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: body.len() });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total_bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes a graph of order at most [`MAX_ORDER`].
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut data = vec![0u8; data_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push(char::from(n as u8 + 63));
    out.extend(data.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    // Expected strings produced by networkx's graph6 writer.
    #[test]
    fn known_codes() {
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::cycle(4)).unwrap(), "Cl");
        assert_eq!(to_graph6(&fixtures::petersen()).unwrap(), "IheA@GUAo");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn decode_known_codes() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(">>graph6<<Cl\n").unwrap(), Graph::cycle(4));
        assert_eq!(parse_graph6("IheA@GUAo").unwrap(), fixtures::petersen());
    }

    #[test]
    fn malformed_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedOrder));
        assert!(matches!(parse_graph6("C~?"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(parse_graph6("C"), Err(Graph6Error::WrongLength { .. })));
        assert!(matches!(
            parse_graph6("A a"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' })
        ));
        // "A`": the second bit of the only data byte is padding.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding));
        assert_eq!(to_graph6(&Graph::empty(63)), Err(Graph6Error::OrderTooLarge(63)));
    }

    #[test]
    fn exhaustive_round_trip_small_orders() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            for mask in 0u32..1 << pairs.len() {
                let g = Graph::from_edges(
                    n,
                    pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e),
                )
                .unwrap();
                assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(g in fixtures::arb_graph(12)) {
            let code = to_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&code).unwrap(), g);
        }
    }
}
