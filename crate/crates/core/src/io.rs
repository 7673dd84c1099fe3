//! graph6 and plain edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn decode_n(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| bad("empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(bad(format!("invalid byte {first:#x}")));
    }
    if first < 126 {
        return Ok(((first - 63) as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        // 36-bit form: far beyond MAX_VERTICES, but decode so the error is precise.
        if bytes.len() < 8 {
            return Err(bad("truncated size field"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            if !(63..=126).contains(&b) {
                return Err(bad(format!("invalid byte {b:#x}")));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(bad("truncated size field"));
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("invalid byte {b:#x}")));
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Ok((n, 4))
}

/// Parses one graph6 string. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, used) = decode_n(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let body = &bytes[used..];
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(bad(format!(
            "expected {need} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6];
            if !(63..=126).contains(&b) {
                return Err(bad(format!("invalid byte {b:#x}")));
            }
            if (b - 63) >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[need - 1];
        if !(63..=126).contains(&last) {
            return Err(bad(format!("invalid byte {last:#x}")));
        }
        let pad = 6 - bits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// graph6 encoding without header.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// Parses `n m` followed by `m` lines of 0-indexed `u v` pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let bad = |m: String| Error::MalformedEdgeList(m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(format!("bad header token {t:?}"))))
        .collect::<Result<_>>()?;
    let [n, m] = nums[..] else {
        return Err(bad(format!("header needs `n m`, got {header:?}")));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let pair: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad token {t:?}"))))
            .collect::<Result<_>>()?;
        let [u, v] = pair[..] else {
            return Err(bad(format!("edge line needs two vertices, got {line:?}")));
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges).map_err(|e| bad(e.to_string()))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::named;

    #[test]
    fn known_strings() {
        // Reference encodings produced by nauty's geng/showg conventions.
        let c5 = named("c5").unwrap();
        assert_eq!(emit_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
        let k4 = Graph::complete(4);
        assert_eq!(emit_graph6(&k4), "C~");
        // Edge set {02, 04, 13, 34} on 5 vertices.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn edgeless_graphs() {
        assert_eq!(parse_graph6("D??").unwrap(), Graph::new(5));
        assert_eq!(parse_graph6("?").unwrap(), Graph::new(0));
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
    }

    #[test]
    fn header_is_optional() {
        assert_eq!(parse_graph6(">>graph6<<Dhc").unwrap(), named("c5").unwrap());
    }

    #[test]
    fn large_sizes_use_long_form() {
        let g = named("p70").unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        for s in ["", "D", "Dhcc", "D h", "Dh\u{7f}", "~?"] {
            assert!(matches!(parse_graph6(s), Err(Error::MalformedGraph6(_))), "{s:?}");
        }
        // 5 vertices, 10 bits → 2 bytes with 2 padding bits; 'd' sets one of them.
        assert!(parse_graph6("Dhd").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = named("house").unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3\n").is_err());
    }
}
