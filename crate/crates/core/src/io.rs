//! Bit-exact graph6 / sparse6 codecs for interop with the standard graph
//! generators, a plain edge-list format for multigraphs, and DOT export.

use crate::error::ParseError;
use crate::graph::{EdgeId, MultiGraph};

const G6_HEADER: &str = ">>graph6<<";
const S6_HEADER: &str = ">>sparse6<<";

fn check_byte(offset: usize, b: u8) -> Result<u8, ParseError> {
    if !(63..=126).contains(&b) {
        return Err(ParseError::ByteOutOfRange { offset, value: b });
    }
    Ok(b - 63)
}

/// Decodes one graph6 line into a simple graph. Only the single-byte order
/// tier (`n <= 62`) is supported.
pub fn parse_graph6(line: &str) -> Result<MultiGraph, ParseError> {
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line).trim_end_matches(['\r', '\n']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if bytes[0] == 126 {
        // Multi-byte order form; decode enough of n to name it.
        let mut n = 0usize;
        for (i, &b) in bytes.iter().enumerate().skip(1).take(3) {
            n = (n << 6) | check_byte(i, b)? as usize;
        }
        return Err(ParseError::UnsupportedOrder(n));
    }
    let n = check_byte(0, bytes[0])? as usize;
    if n == 0 {
        return Err(ParseError::UnsupportedOrder(0));
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(ParseError::Truncated { expected, got: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(ParseError::TrailingData { offset: expected, got: bytes.len() - expected });
    }
    let mut bits = Vec::with_capacity(6 * (expected - 1));
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        let v = check_byte(i, b)?;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(ParseError::NonzeroPadding { offset: expected - 1 });
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(MultiGraph::new(n, &edges).expect("decoded graph is valid"))
}

/// Encodes a simple graph as a graph6 line. Multigraphs are rejected; use
/// the edge-list format for those.
pub fn emit_graph6(g: &MultiGraph) -> Result<String, ParseError> {
    if let Some((u, v, _)) = g.parallel_classes().into_iter().next() {
        return Err(ParseError::MultigraphUnsupported { u, v });
    }
    let n = g.n();
    if n > 62 {
        return Err(ParseError::UnsupportedOrder(n));
    }
    let mut out = vec![63 + n as u8];
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacent(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push(v + 63);
    }
    Ok(String::from_utf8(out).expect("printable bytes"))
}

/// Decodes one sparse6 line (leading `:`); multigraphs decode faithfully,
/// loops are rejected.
pub fn parse_sparse6(line: &str) -> Result<MultiGraph, ParseError> {
    let line = line.strip_prefix(S6_HEADER).unwrap_or(line).trim_end_matches(['\r', '\n']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if bytes[0] != b':' {
        return Err(ParseError::MissingSparse6Header);
    }
    if bytes.len() < 2 {
        return Err(ParseError::Truncated { expected: 2, got: bytes.len() });
    }
    if bytes[1] == 126 {
        let mut n = 0usize;
        for (i, &b) in bytes.iter().enumerate().skip(2).take(3) {
            n = (n << 6) | check_byte(i, b)? as usize;
        }
        return Err(ParseError::UnsupportedOrder(n));
    }
    let n = check_byte(1, bytes[1])? as usize;
    if n == 0 {
        return Err(ParseError::UnsupportedOrder(0));
    }
    let k = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    let k = k.max(1);
    let mut bits = Vec::new();
    for (i, &b) in bytes.iter().enumerate().skip(2) {
        let v = check_byte(i, b)?;
        for t in (0..6).rev() {
            bits.push(v >> t & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0usize;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let mut x = 0usize;
        for t in 0..k {
            x = (x << 1) | bits[pos + 1 + t] as usize;
        }
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n || x >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(ParseError::Sparse6Loop { vertex: v, offset: pos });
        } else {
            edges.push((x, v));
        }
    }
    MultiGraph::new(n, &edges).map_err(|_| ParseError::Sparse6Loop { vertex: v, offset: pos })
}

/// Parses the plain edge-list format: a `n m` header line then `m` lines
/// `u v` (0-based). Repeated lines encode parallel edges.
pub fn parse_edge_list(text: &str) -> Result<MultiGraph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (first_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or(ParseError::Empty)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::EdgeList { line: first_no + 1, msg: "expected `n m` header".into() })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::EdgeList { line: first_no + 1, msg: "expected `n m` header".into() })?;
    if parts.next().is_some() {
        return Err(ParseError::EdgeList { line: first_no + 1, msg: "trailing tokens in header".into() });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, line) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or_else(|| ParseError::EdgeList { line: 0, msg: format!("expected {m} edge lines") })?;
        let mut it = line.split_whitespace();
        let parse_v = |tok: Option<&str>| -> Result<usize, ParseError> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| ParseError::EdgeList { line: no + 1, msg: "expected `u v`".into() })
        };
        let u: usize = parse_v(it.next())?;
        let v: usize = parse_v(it.next())?;
        if it.next().is_some() {
            return Err(ParseError::EdgeList { line: no + 1, msg: "trailing tokens".into() });
        }
        if u >= n || v >= n {
            return Err(ParseError::EdgeList { line: no + 1, msg: format!("vertex out of range 0..{n}") });
        }
        if u == v {
            return Err(ParseError::EdgeList { line: no + 1, msg: "loops are not allowed".into() });
        }
        edges.push((u, v));
    }
    if let Some((no, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(ParseError::EdgeList { line: no + 1, msg: "unexpected data after edges".into() });
    }
    MultiGraph::new(n, &edges).map_err(|e| ParseError::EdgeList { line: first_no + 1, msg: e.to_string() })
}

/// Emits the edge-list format: endpoints sorted within a line, lines in
/// edge-id order.
pub fn emit_edge_list(g: &MultiGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (_, u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u.min(v), u.max(v)));
    }
    out
}

const DOT_PALETTE: [&str; 6] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
];

/// DOT export. Each highlight group (e.g. one removable class) is drawn
/// bold in its own palette color and labeled by group index.
pub fn emit_dot(g: &MultiGraph, highlights: &[Vec<EdgeId>]) -> String {
    let mut class_of: std::collections::BTreeMap<EdgeId, usize> = Default::default();
    for (ci, group) in highlights.iter().enumerate() {
        for &e in group {
            class_of.entry(e).or_insert(ci);
        }
    }
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (e, u, v) in g.edges() {
        let (a, b) = (u.min(v), u.max(v));
        match class_of.get(&e) {
            Some(&ci) => {
                let color = DOT_PALETTE[ci % DOT_PALETTE.len()];
                out.push_str(&format!(
                    "  {a} -- {b} [color=\"{color}\", penwidth=2.5, label=\"c{ci}\"];\n"
                ));
            }
            None => out.push_str(&format!("  {a} -- {b};\n")),
        }
    }
    out.push_str("}\n");
    out
}

/// Splits a text stream into graph records: graph6/sparse6 are one per
/// line. Blank lines and format headers are skipped.
pub fn parse_graph_lines(text: &str) -> Result<Vec<MultiGraph>, ParseError> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line == G6_HEADER || line == S6_HEADER {
            continue;
        }
        let g = if line.starts_with(':') {
            parse_sparse6(line)?
        } else {
            parse_graph6(line)?
        };
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraph};
    use crate::iso::is_isomorphic;

    #[test]
    fn hand_encoded_graph6_values() {
        // 'C' = n=4; '~' packs six 1-bits: the complete graph.
        let k4 = parse_graph6("C~").unwrap();
        assert!(is_isomorphic(&k4, &named_graph(NamedGraph::K4)));
        // 'h' = 101001: edges (0,1), (1,2), (2,3): the path.
        let p4 = parse_graph6("Ch").unwrap();
        assert_eq!((p4.n(), p4.m()), (4, 3));
        assert!(p4.adjacent(0, 1) && p4.adjacent(1, 2) && p4.adjacent(2, 3));
        // '@' alone: one vertex, no edges.
        let trivial = parse_graph6("@").unwrap();
        assert_eq!((trivial.n(), trivial.m()), (1, 0));
    }

    #[test]
    fn graph6_round_trips() {
        for line in ["C~", "Ch", "@", "DQc", "E?~o"] {
            let g = parse_graph6(line).unwrap();
            assert_eq!(emit_graph6(&g).unwrap(), line, "{line}");
        }
        let w5 = named_graph(NamedGraph::W5);
        let enc = emit_graph6(&w5).unwrap();
        assert!(is_isomorphic(&parse_graph6(&enc).unwrap(), &w5));
    }

    #[test]
    fn graph6_errors_name_offsets() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(
            parse_graph6("C"),
            Err(ParseError::Truncated { expected: 2, got: 1 })
        );
        assert_eq!(
            parse_graph6("C~~"),
            Err(ParseError::TrailingData { offset: 2, got: 1 })
        );
        assert!(matches!(
            parse_graph6("C\u{1f}"),
            Err(ParseError::ByteOutOfRange { offset: 1, .. })
        ));
        // n=3 needs 3 bits; a set bit in the padding tail is garbage.
        assert_eq!(
            parse_graph6("B{"),
            Err(ParseError::NonzeroPadding { offset: 1 })
        );
        assert!(matches!(parse_graph6("~AAA"), Err(ParseError::UnsupportedOrder(_))));
    }

    #[test]
    fn emit_graph6_rejects_multigraphs() {
        let doubled = crate::graph::odd_wheel(3, Some(&[2, 1, 1])).unwrap();
        assert!(matches!(
            emit_graph6(&doubled),
            Err(ParseError::MultigraphUnsupported { .. })
        ));
    }

    #[test]
    fn hand_encoded_sparse6_triangle() {
        // n=3, k=2; pairs (1,0) (1,0) (0,1) encode 0-1, 0-2, 1-2; padded
        // with ones. Bits 100 100 001 111 pack to 'c', 'N'.
        let tri = parse_sparse6(":BcN").unwrap();
        assert_eq!((tri.n(), tri.m()), (3, 3));
        assert!(tri.adjacent(0, 1) && tri.adjacent(0, 2) && tri.adjacent(1, 2));
    }

    #[test]
    fn sparse6_decodes_parallel_edges() {
        // n=2, k=1: pairs (1,0) then (0,0) give the edge 0-1 twice; the
        // final pair (1,1) from padding overflows v and stops decoding.
        // Bits 10 00 11 -> value 100011 = 35 -> 'b'. Header 'A' = n=2.
        let g = parse_sparse6(":Ab").unwrap();
        assert_eq!((g.n(), g.m()), (2, 2));
        assert_eq!(g.parallel_classes().len(), 1);
    }

    #[test]
    fn sparse6_requires_colon() {
        assert_eq!(parse_sparse6("BcN"), Err(ParseError::MissingSparse6Header));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("2 1\n0 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        let multi = parse_edge_list("3 4\n0 1\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(multi.m(), 4);
        assert_eq!(multi.parallel_classes().len(), 1);
        let text = emit_edge_list(&multi);
        let again = parse_edge_list(&text).unwrap();
        assert_eq!(emit_edge_list(&again), text);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(ParseError::Empty)));
        assert!(matches!(
            parse_edge_list("2 1\n0 2\n"),
            Err(ParseError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 0\n"),
            Err(ParseError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n0 1\n"),
            Err(ParseError::EdgeList { line: 3, .. })
        ));
    }

    #[test]
    fn dot_highlights_groups() {
        let k4 = named_graph(NamedGraph::K4);
        let ids: Vec<EdgeId> = k4.edge_ids().collect();
        let dot = emit_dot(&k4, &[vec![ids[0], ids[5]], vec![ids[1]]]);
        assert!(dot.contains("graph g {"));
        assert!(dot.contains("label=\"c0\""));
        assert!(dot.contains("label=\"c1\""));
        assert!(dot.contains("penwidth"));
    }
}
