//! graph6 (short form), DIMACS `.col` and plain edge-list readers.
//!
//! All readers accept LF and CRLF line endings.

use thiserror::Error;

use super::{Graph, GraphError};

/// Largest vertex count representable by short-form graph6.
const GRAPH6_MAX_N: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("graph6: invalid character {byte:#04x} at byte {offset}")]
    Graph6BadChar { offset: usize, byte: u8 },
    #[error("graph6: long-form header at byte {offset} (n >= 63 is not supported)")]
    Graph6LongForm { offset: usize },
    #[error("graph6: truncated at byte {offset}, expected {expected} bytes")]
    Graph6Truncated { offset: usize, expected: usize },
    #[error("graph6: unexpected trailing data at byte {offset}")]
    Graph6TrailingData { offset: usize },
    #[error("graph6: graphs with 0 vertices are not supported")]
    Graph6NoVertices,
    #[error("graph6: {n} vertices cannot be encoded in short form")]
    Graph6Unsupported { n: usize },
    #[error("line {line}: missing 'p edge N M' problem line")]
    MissingProblemLine { line: usize },
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: missing vertex count")]
    MissingVertexCount { line: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: i64, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: i64 },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InputFormat {
    Graph6,
    Dimacs,
    #[value(name = "edges")]
    #[serde(rename = "edges")]
    EdgeList,
}

/// Picks a reader from the first meaningful line: DIMACS lines start with a
/// `c` or `p` token, an edge list starts with a bare integer, anything else
/// is treated as graph6.
pub fn detect_format(text: &str) -> InputFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let token = first.split_whitespace().next().unwrap_or("");
    let multi_token = first.split_whitespace().nth(1).is_some();
    if token == "p" || (token == "c" && (multi_token || first == "c")) {
        InputFormat::Dimacs
    } else if !token.is_empty() && !multi_token && token.bytes().all(|b| b.is_ascii_digit()) {
        InputFormat::EdgeList
    } else {
        InputFormat::Graph6
    }
}

pub fn parse(text: &str, format: Option<InputFormat>) -> Result<Graph, ParseError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        InputFormat::Graph6 => parse_graph6(text),
        InputFormat::Dimacs => parse_dimacs(text),
        InputFormat::EdgeList => parse_edge_list(text),
    }
}

/// Reads one short-form graph6 line. A single trailing newline is allowed.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let body = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(ParseError::EmptyInput);
    };
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::Graph6BadChar { offset, byte });
        }
    }
    if first == 126 {
        return Err(ParseError::Graph6LongForm { offset: 0 });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(ParseError::Graph6NoVertices);
    }
    let bits = n * (n - 1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(ParseError::Graph6Truncated {
            offset: bytes.len(),
            expected,
        });
    }
    if bytes.len() > expected {
        return Err(ParseError::Graph6TrailingData { offset: expected });
    }
    let payload = &bytes[1..];
    let mut g = Graph::new(n).expect("n >= 1");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let word = payload[k / 6] - 63;
            if word & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Short-form graph6 encoding (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(ParseError::Graph6Unsupported { n });
    }
    let mut out = vec![n as u8 + 63];
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}

fn parse_int(token: &str, line: usize, what: &str) -> Result<i64, ParseError> {
    token.parse::<i64>().map_err(|_| ParseError::Malformed {
        line,
        message: format!("invalid {what} '{token}'"),
    })
}

fn insert_edge(g: &mut Graph, u: i64, v: i64, line: usize) -> Result<(), ParseError> {
    let n = g.n();
    for vertex in [u, v] {
        if vertex < 0 || vertex as usize >= n {
            return Err(ParseError::VertexOutOfRange { line, vertex, n });
        }
    }
    match g.add_edge(u as usize, v as usize) {
        Ok(_) => Ok(()),
        Err(GraphError::SelfLoop(_)) => Err(ParseError::SelfLoop { line, vertex: u }),
        Err(e) => Err(ParseError::Malformed {
            line,
            message: e.to_string(),
        }),
    }
}

/// DIMACS `.col`: `c` comments, one `p edge N M` line, then `e u v` lines
/// with 1-based vertices. Reported vertices in errors are as written.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if graph.is_some() {
                    return Err(ParseError::DuplicateProblemLine { line });
                }
                let fmt = tokens.next();
                if !matches!(fmt, Some("edge") | Some("col")) {
                    return Err(ParseError::Malformed {
                        line,
                        message: "expected 'p edge N M'".into(),
                    });
                }
                let n_tok = tokens.next().ok_or(ParseError::MissingVertexCount { line })?;
                let n = parse_int(n_tok, line, "vertex count")?;
                if let Some(m) = tokens.next() {
                    parse_int(m, line, "edge count")?;
                }
                if n < 1 {
                    return Err(ParseError::Malformed {
                        line,
                        message: format!("vertex count must be positive, got {n}"),
                    });
                }
                graph = Some(Graph::new(n as usize).map_err(|e| ParseError::Malformed {
                    line,
                    message: e.to_string(),
                })?);
            }
            "e" => {
                let g = graph.as_mut().ok_or(ParseError::MissingProblemLine { line })?;
                let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(ParseError::Malformed {
                        line,
                        message: "expected 'e u v'".into(),
                    });
                };
                let u = parse_int(u, line, "vertex")?;
                let v = parse_int(v, line, "vertex")?;
                let n = g.n();
                for vertex in [u, v] {
                    if vertex < 1 || vertex as usize > n {
                        return Err(ParseError::VertexOutOfRange { line, vertex, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                insert_edge(g, u - 1, v - 1, line)?;
            }
            other => {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("unknown line type '{other}'"),
                })
            }
        }
    }
    graph.ok_or(ParseError::MissingProblemLine {
        line: last_line.max(1),
    })
}

/// Edge list: first line is the vertex count, then one `u v` pair per line,
/// 0-based. Blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let Some((idx, header)) = lines.next() else {
        return Err(ParseError::EmptyInput);
    };
    let header_line = idx + 1;
    let n = parse_int(header.trim(), header_line, "vertex count")?;
    if n < 1 {
        return Err(ParseError::Malformed {
            line: header_line,
            message: format!("vertex count must be positive, got {n}"),
        });
    }
    let mut g = Graph::new(n as usize).map_err(|e| ParseError::Malformed {
        line: header_line,
        message: e.to_string(),
    })?;
    for (idx, raw) in lines {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(ParseError::Malformed {
                line,
                message: "expected 'u v'".into(),
            });
        };
        let u = parse_int(u, line, "vertex")?;
        let v = parse_int(v, line, "vertex")?;
        insert_edge(&mut g, u, v, line)?;
    }
    Ok(g)
}
