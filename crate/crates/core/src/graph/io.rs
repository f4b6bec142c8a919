//! Text formats: graph6, whitespace edge lists and DIMACS.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    /// Standard graph6, one graph per line.
    Graph6,
    /// Header line `n m`, then one `u v` pair per line (0-indexed).
    EdgeList,
    /// `p edge n m` followed by `e u v` lines (1-indexed), `c` comments.
    Dimacs,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edges",
            Format::Dimacs => "dimacs",
        }
    }

    /// Guesses the format from the first meaningful line.
    pub fn detect(text: &[u8]) -> Format {
        let s = String::from_utf8_lossy(text);
        let first = s
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .unwrap_or("");
        if first.starts_with("p ") || first.starts_with("c ") || first == "c" {
            Format::Dimacs
        } else if first
            .split_whitespace()
            .all(|t| t.chars().all(|c| c.is_ascii_digit()))
            && first.split_whitespace().count() == 2
        {
            Format::EdgeList
        } else {
            Format::Graph6
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edges" | "edge_list" | "edgelist" | "el" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed input at byte {offset}: {reason}")]
    MalformedInput { offset: usize, reason: String },
    #[error("vertex {vertex} out of range for {n} vertices (byte {offset})")]
    OutOfRangeVertex {
        vertex: usize,
        n: usize,
        offset: usize,
    },
}

fn malformed(offset: usize, reason: impl Into<String>) -> ParseError {
    ParseError::MalformedInput {
        offset,
        reason: reason.into(),
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>, offsets: &[usize]) -> Result<Graph, ParseError> {
    Graph::new(n, edges.iter().copied()).map_err(|e| {
        let at = |u: usize, v: usize| {
            edges
                .iter()
                .rposition(|&(a, b)| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
                .map(|i| offsets[i])
                .unwrap_or(0)
        };
        match e {
            GraphError::SelfLoop(v) => malformed(at(v, v), format!("self-loop at vertex {v}")),
            GraphError::DuplicateEdge(u, v) => {
                malformed(at(u, v), format!("duplicate edge {u}-{v}"))
            }
            other => malformed(0, other.to_string()),
        }
    })
}

/// Parses a single graph. For graph6 input with several lines, only the first
/// non-empty line is read; use [`parse_graphs`] for streams.
pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => {
            let (start, line) = lines_with_offsets(text)
                .find(|(_, l)| !l.iter().all(u8::is_ascii_whitespace))
                .ok_or_else(|| malformed(0, "empty graph6 input"))?;
            parse_graph6_line(line, start)
        }
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

/// Parses every graph in the input: one per non-empty line for graph6, a single
/// graph for the other formats.
pub fn parse_graphs(text: &[u8], format: Format) -> Result<Vec<Graph>, ParseError> {
    match format {
        Format::Graph6 => lines_with_offsets(text)
            .filter(|(_, l)| !l.iter().all(u8::is_ascii_whitespace))
            .map(|(start, line)| parse_graph6_line(line, start))
            .collect(),
        _ => parse_graph(text, format).map(|g| vec![g]),
    }
}

fn lines_with_offsets(text: &[u8]) -> impl Iterator<Item = (usize, &[u8])> {
    let mut start = 0;
    text.split(|&b| b == b'\n').map(move |line| {
        let s = start;
        start += line.len() + 1;
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        (s, line)
    })
}

fn parse_graph6_line(line: &[u8], base: usize) -> Result<Graph, ParseError> {
    let mut line = line;
    let mut base = base;
    if let Some(rest) = line.strip_prefix(b">>graph6<<") {
        line = rest;
        base += 10;
    }
    while let Some((&last, rest)) = line.split_last() {
        if last.is_ascii_whitespace() {
            line = rest;
        } else {
            break;
        }
    }
    for (i, &b) in line.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(base + i, format!("byte {b} outside graph6 range")));
        }
    }
    let (n, header) = match line {
        [] => return Err(malformed(base, "missing graph6 size")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed(base + line.len(), "truncated 36-bit size"));
            }
            let n = rest[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed(base + line.len(), "truncated 18-bit size"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &line[header..];
    if body.len() != need {
        return Err(malformed(
            base + header + body.len().min(need),
            format!("expected {need} adjacency bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = body[k / 6] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(malformed(base + header + k / 6, "non-zero padding bits"));
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 upper triangle is simple"))
}

fn tokens(text: &[u8]) -> Vec<(usize, usize, &str)> {
    // (line index, byte offset, token)
    let mut out = Vec::new();
    for (idx, (start, line)) in lines_with_offsets(text).enumerate() {
        let s = std::str::from_utf8(line).unwrap_or("");
        let mut pos = 0;
        for tok in s.split_whitespace() {
            let at = s[pos..].find(tok).map(|p| p + pos).unwrap_or(pos);
            pos = at + tok.len();
            out.push((idx, start + at, tok));
        }
    }
    out
}

fn number(tok: &str, offset: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| malformed(offset, format!("expected a non-negative integer, found `{tok}`")))
}

fn parse_edge_list(text: &[u8]) -> Result<Graph, ParseError> {
    if std::str::from_utf8(text).is_err() {
        return Err(malformed(0, "input is not UTF-8"));
    }
    let toks: Vec<_> = tokens(text)
        .into_iter()
        .filter(|(_, _, t)| !t.starts_with('#'))
        .collect();
    if toks.len() < 2 {
        return Err(malformed(text.len(), "missing `n m` header"));
    }
    let n = number(toks[0].2, toks[0].1)?;
    let m = number(toks[1].2, toks[1].1)?;
    let rest = &toks[2..];
    if rest.len() != 2 * m {
        let at = rest.last().map(|t| t.1).unwrap_or(text.len());
        return Err(malformed(
            at,
            format!("header announces {m} edges, found {} endpoints", rest.len()),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    let mut offsets = Vec::with_capacity(m);
    for pair in rest.chunks(2) {
        let u = number(pair[0].2, pair[0].1)?;
        let v = number(pair[1].2, pair[1].1)?;
        for (x, off) in [(u, pair[0].1), (v, pair[1].1)] {
            if x >= n {
                return Err(ParseError::OutOfRangeVertex {
                    vertex: x,
                    n,
                    offset: off,
                });
            }
        }
        edges.push((u, v));
        offsets.push(pair[0].1);
    }
    build(n, edges, &offsets)
}

fn parse_dimacs(text: &[u8]) -> Result<Graph, ParseError> {
    if std::str::from_utf8(text).is_err() {
        return Err(malformed(0, "input is not UTF-8"));
    }
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut offsets = Vec::new();
    for (start, line) in lines_with_offsets(text) {
        let s = std::str::from_utf8(line).unwrap_or("");
        let mut parts = s.split_whitespace();
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(malformed(start, "second problem line"));
                }
                let kind = parts.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(malformed(start, format!("unsupported problem type `{kind}`")));
                }
                let n = number(parts.next().unwrap_or(""), start)?;
                let m = number(parts.next().unwrap_or(""), start)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| malformed(start, "edge before problem line"))?;
                let u = number(parts.next().unwrap_or(""), start)?;
                let v = number(parts.next().unwrap_or(""), start)?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(ParseError::OutOfRangeVertex {
                            vertex: x,
                            n,
                            offset: start,
                        });
                    }
                }
                edges.push((u - 1, v - 1));
                offsets.push(start);
            }
            Some(tag) if tag.starts_with('c') => {}
            Some(tag) => return Err(malformed(start, format!("unknown line tag `{tag}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| malformed(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(malformed(
            text.len(),
            format!("problem line announces {m} edges, found {}", edges.len()),
        ));
    }
    build(n, edges, &offsets)
}

fn graph6_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Serializes `g`; the output always ends with a newline.
pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => {
            let n = g.n();
            let mut out = Vec::new();
            graph6_size(n, &mut out);
            let bits = n * n.saturating_sub(1) / 2;
            let mut body = vec![0u8; bits.div_ceil(6)];
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if g.has_edge(i, j) {
                        body[k / 6] |= 1 << (5 - k % 6);
                    }
                    k += 1;
                }
            }
            out.extend(body.into_iter().map(|b| b + 63));
            out.push(b'\n');
            String::from_utf8(out).expect("graph6 is ASCII")
        }
        Format::EdgeList => {
            let mut s = format!("{} {}\n", g.n(), g.m());
            for &(u, v) in g.edges() {
                let _ = writeln!(s, "{u} {v}");
            }
            s
        }
        Format::Dimacs => {
            let mut s = format!("p edge {} {}\n", g.n(), g.m());
            for &(u, v) in g.edges() {
                let _ = writeln!(s, "e {} {}", u + 1, v + 1);
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_k4() {
        let g = parse_graph(b"C~", Format::Graph6).unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert_eq!(serialize_graph(&g, Format::Graph6), "C~\n");
    }

    #[test]
    fn graph6_c5_by_hand() {
        // Upper-triangle order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),(1,4),(2,4),(3,4)
        // for the cycle 0-1-2-3-4-0: bits 1 0 1 0 0 1 | 1 0 0 1 (+ 2 padding zeros)
        // = 0b101001 = 41 -> 'h', 0b100100 = 36 -> 'c'.
        let g = parse_graph(b"Dhc", Format::Graph6).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree_sequence(), vec![2; 5]);
        assert!(g.has_edge(0, 4) && g.has_edge(2, 3) && !g.has_edge(0, 2));
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            parse_graph(b"C", Format::Graph6),
            Err(ParseError::MalformedInput { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph(b"C~ \x01", Format::Graph6),
            Err(ParseError::MalformedInput { .. })
        ));
        // n=2 has one bit; the remaining five padding bits must be zero.
        assert!(parse_graph(b"A_", Format::Graph6).is_ok());
        assert!(matches!(
            parse_graph(b"A`", Format::Graph6),
            Err(ParseError::MalformedInput { offset: 1, .. })
        ));
    }

    #[test]
    fn graph6_large_header() {
        let n = 70;
        let g = Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let s = serialize_graph(&g, Format::Graph6);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph(s.as_bytes(), Format::Graph6).unwrap(), g);
    }

    #[test]
    fn edge_list_single_edge() {
        let g = parse_graph(b"2 1\n0 1\n", Format::EdgeList).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            parse_graph(b"2 1\n0 2\n", Format::EdgeList),
            Err(ParseError::OutOfRangeVertex { vertex: 2, n: 2, offset: 6 })
        ));
        assert!(matches!(
            parse_graph(b"3 2\n0 1\n", Format::EdgeList),
            Err(ParseError::MalformedInput { .. })
        ));
        assert!(matches!(
            parse_graph(b"3 2\n0 1\n1 0\n", Format::EdgeList),
            Err(ParseError::MalformedInput { offset: 8, .. })
        ));
        assert!(matches!(
            parse_graph(b"3 1\n0 x\n", Format::EdgeList),
            Err(ParseError::MalformedInput { offset: 6, .. })
        ));
    }

    #[test]
    fn dimacs_is_one_indexed() {
        let g = parse_graph(b"c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", Format::Dimacs)
            .unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(0, 2));
        assert!(matches!(
            parse_graph(b"p edge 2 1\ne 0 1\n", Format::Dimacs),
            Err(ParseError::OutOfRangeVertex { vertex: 0, .. })
        ));
    }

    #[test]
    fn detection() {
        assert_eq!(Format::detect(b"C~\n"), Format::Graph6);
        assert_eq!(Format::detect(b"3 2\n0 1\n1 2\n"), Format::EdgeList);
        assert_eq!(Format::detect(b"p edge 2 1\ne 1 2\n"), Format::Dimacs);
    }

    #[test]
    fn graph6_stream() {
        let gs = parse_graphs(b"C~\nDhc\n\n", Format::Graph6).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].m(), 5);
    }
}
