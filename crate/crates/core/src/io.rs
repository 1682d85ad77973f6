//! graph6, edge-list and DOT formats.
//!
//! graph6 follows the usual layout: a size prefix `N(n)` followed by the
//! upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ..`, six bits per byte, each byte offset by
//! 63 and the final byte zero padded.

use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";
const SHORT_FORM_MAX: usize = 62;
const EXTENDED_FORM_MAX: usize = 258_047;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    BadGraph6Byte { byte: u8, offset: usize },
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: {n} vertices is outside the supported range 1..={max}")]
    Graph6Size { n: usize, max: usize },
    #[error("edge list declares {declared} edges but contains {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Read(#[from] std::io::Error),
}

/// Graphs read from one input, each tagged with its (1-based) source line.
#[derive(Debug, Clone, Default)]
pub struct GraphDocument {
    entries: Vec<(usize, Graph)>,
}

impl GraphDocument {
    pub fn push(&mut self, line: usize, g: Graph) {
        if let Some(&(last, _)) = self.entries.last() {
            assert!(line > last, "line numbers must increase");
        }
        self.entries.push((line, g));
    }

    pub fn entries(&self) -> &[(usize, Graph)] {
        &self.entries
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.entries.iter().map(|(_, g)| g)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn parse_graph6(line: &str) -> Result<Graph, IoError> {
    parse_graph6_with_cap(line, MAX_VERTICES)
}

pub fn parse_graph6_with_cap(line: &str, cap: usize) -> Result<Graph, IoError> {
    let text = line.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(IoError::BadGraph6Byte { byte, offset });
        }
    }
    let (n, header) = match bytes {
        [] => return Err(IoError::Graph6Empty),
        [126, 126, ..] => {
            return Err(IoError::Graph6Size {
                n: EXTENDED_FORM_MAX + 1,
                max: cap.min(EXTENDED_FORM_MAX),
            })
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(IoError::Graph6Length {
                    expected: 3,
                    found: rest.len(),
                });
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [first, ..] => ((first - 63) as usize, 1),
    };
    if n == 0 || n > cap.min(MAX_VERTICES) {
        return Err(IoError::Graph6Size {
            n,
            max: cap.min(MAX_VERTICES),
        });
    }
    let data = &bytes[header..];
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(IoError::Graph6Length {
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|source| IoError::Graph { line: 1, source })
}

pub fn emit_graph6(g: &Graph) -> Result<String, IoError> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= SHORT_FORM_MAX {
        out.push(n as u8 + 63);
    } else if n <= EXTENDED_FORM_MAX {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    } else {
        return Err(IoError::Graph6Size {
            n,
            max: EXTENDED_FORM_MAX,
        });
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
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Streams graph6 lines, skipping blank lines. Yields `(line, graph)`.
pub fn graph6_lines<R: BufRead>(
    reader: R,
    cap: usize,
) -> impl Iterator<Item = Result<(usize, Graph), IoError>> {
    reader.lines().enumerate().filter_map(move |(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(IoError::Read(e))),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(
                parse_graph6_with_cap(text.trim(), cap)
                    .map(|g| (line_no, g))
                    .map_err(|e| IoError::Malformed {
                        line: line_no,
                        message: e.to_string(),
                    }),
            ),
        }
    })
}

/// Parses `n m` followed by `m` lines `u v` (0-based). Blank lines and `#`
/// comments are ignored; CRLF is accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    parse_edge_list_with_cap(text, MAX_VERTICES)
}

pub fn parse_edge_list_with_cap(text: &str, cap: usize) -> Result<Graph, IoError> {
    let mut data = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    });
    let pair = |line: usize, content: &str| -> Result<(usize, usize), IoError> {
        let malformed = |message: String| IoError::Malformed { line, message };
        let mut fields = content.split_whitespace();
        let mut next = || -> Result<usize, IoError> {
            let tok = fields
                .next()
                .ok_or_else(|| malformed(format!("expected two integers, got {content:?}")))?;
            tok.parse()
                .map_err(|_| malformed(format!("{tok:?} is not a non-negative integer")))
        };
        let a = next()?;
        let b = next()?;
        if fields.next().is_some() {
            return Err(malformed(format!("expected two integers, got {content:?}")));
        }
        Ok((a, b))
    };

    let (header_line, header) = data.next().ok_or(IoError::Malformed {
        line: 1,
        message: "missing `n m` header".to_string(),
    })?;
    let (n, m) = pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in data {
        let (u, v) = pair(line, content)?;
        if u >= n || v >= n || u == v {
            let source = Graph::from_edges_with_cap(n.max(1), &[(u, v)], cap).unwrap_err();
            return Err(IoError::Graph { line, source });
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(IoError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::from_edges_with_cap(n, &edges, cap).map_err(|source| IoError::Graph {
        line: if n == 0 { header_line } else { last_line },
        source,
    })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT rendering: vertices then edges, both ascending.
pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}

impl InputFormat {
    /// Guesses from a file extension, falling back to the first data line:
    /// two integers means an edge list.
    pub fn detect(path: Option<&str>, text: &str) -> InputFormat {
        if let Some(ext) = path.and_then(|p| p.rsplit_once('.')).map(|(_, e)| e) {
            match ext.to_ascii_lowercase().as_str() {
                "g6" | "graph6" => return InputFormat::Graph6,
                "el" | "edges" | "edgelist" => return InputFormat::EdgeList,
                _ => {}
            }
        }
        let first = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty());
        match first {
            Some(l)
                if l.split_whitespace().count() == 2
                    && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
            {
                InputFormat::EdgeList
            }
            _ => InputFormat::Graph6,
        }
    }
}

/// Reads a whole document in the given format. An edge list holds exactly
/// one graph; a graph6 file holds one graph per non-blank line.
pub fn read_document(
    text: &str,
    format: InputFormat,
    cap: usize,
) -> Result<GraphDocument, IoError> {
    let mut doc = GraphDocument::default();
    match format {
        InputFormat::EdgeList => {
            let first_line = text
                .lines()
                .position(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
                .map_or(1, |i| i + 1);
            doc.push(first_line, parse_edge_list_with_cap(text, cap)?);
        }
        InputFormat::Graph6 => {
            for item in graph6_lines(text.as_bytes(), cap) {
                let (line, g) = item?;
                doc.push(line, g);
            }
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_small_cases() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(emit_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(emit_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(emit_graph6(&k1).unwrap(), "@");
        assert_eq!(
            parse_graph6(">>graph6<<C~\r\n").unwrap(),
            Graph::complete(4)
        );
    }

    #[test]
    fn graph6_reference_strings() {
        // Strings produced by networkx.to_graph6_bytes(header=False).
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(emit_graph6(&Graph::path(5)).unwrap(), "DhC");
        assert_eq!(emit_graph6(&Graph::cycle(5)).unwrap(), "Dhc");
        assert_eq!(emit_graph6(&Graph::path(7)).unwrap(), "FhCGG");
    }

    #[test]
    fn graph6_extended_size() {
        let g = Graph::path(100);
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(s.len(), 4 + (100 * 99 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            parse_graph6("C~ "),
            Err(IoError::BadGraph6Byte {
                byte: b' ',
                offset: 2
            })
        ));
        assert!(matches!(
            parse_graph6("D~"),
            Err(IoError::Graph6Length {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(parse_graph6(""), Err(IoError::Graph6Empty)));
        assert!(matches!(
            parse_graph6_with_cap("D??", 4),
            Err(IoError::Graph6Size { n: 5, max: 4 })
        ));
        assert!(matches!(
            parse_graph6("?"),
            Err(IoError::Graph6Size { n: 0, .. })
        ));
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list("2 1\n0 1").unwrap(), Graph::complete(2));
        assert_eq!(
            parse_edge_list("5 4\n0 1\n1 2\n2 3\n3 4").unwrap(),
            Graph::path(5)
        );
        let e3 = parse_edge_list("3 0").unwrap();
        assert_eq!((e3.n(), e3.m()), (3, 0));
        let commented = "# a path\r\n\r\n3 2\r\n0 1 # first\r\n\r\n1 2\r\n";
        assert_eq!(parse_edge_list(commented).unwrap(), Graph::path(3));
    }

    #[test]
    fn edge_list_errors() {
        match parse_edge_list("3 2\n0 1\n1 x\n") {
            Err(IoError::Malformed { line: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(IoError::EdgeCountMismatch {
                declared: 2,
                found: 1
            })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 1\n"),
            Err(IoError::Graph {
                line: 2,
                source: GraphError::SelfLoop(1)
            })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(IoError::Graph { line: 2, .. })
        ));
    }

    #[test]
    fn dot_is_sorted() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(
            emit_dot(&g),
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn detection_and_documents() {
        assert_eq!(
            InputFormat::detect(Some("x.g6"), "2 1"),
            InputFormat::Graph6
        );
        assert_eq!(
            InputFormat::detect(None, "# c\n2 1\n0 1"),
            InputFormat::EdgeList
        );
        assert_eq!(InputFormat::detect(None, "A_\nC~\n"), InputFormat::Graph6);
        let doc = read_document("A_\n\nC~\n", InputFormat::Graph6, MAX_VERTICES).unwrap();
        let lines: Vec<_> = doc.entries().iter().map(|(l, _)| *l).collect();
        assert_eq!(lines, vec![1, 3]);
        match read_document("A_\nC\n", InputFormat::Graph6, MAX_VERTICES) {
            Err(IoError::Malformed { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
