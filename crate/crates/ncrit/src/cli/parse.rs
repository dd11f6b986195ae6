//! Parsers for the two line-oriented input formats.
//!
//! Formation files have one line per prime, `<p>: <q1> <q2> ...`,
//! defining the set assigned to `p`. Graph files start with
//! `vertices: <p1> <p2> ...` and continue with `<a> -> <b>` edge
//! lines. `#` begins a comment in both formats; blank lines are
//! ignored; LF and CRLF both work.

use std::collections::BTreeMap;

use crate::formation::LocalFormationSpec;
use crate::graph::CriticalGraph;
use crate::primes::{is_prime, Prime, PrimeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {token:?} is not a number")]
    InvalidNumber { line: usize, token: String },
    #[error("line {line}: {value} is not prime")]
    NotPrime { line: usize, value: u64 },
    #[error("line {line}: expected {expected}")]
    MalformedLine { line: usize, expected: &'static str },
    #[error("line {line}: duplicate definition for {p}")]
    DuplicateHead { line: usize, p: u64 },
    #[error("line {line}: the set for {p} must contain {p} itself")]
    HeadNotMember { line: usize, p: u64 },
    #[error("line {line}: {q} is not a member of the support (no line defines it)")]
    OutsideSupport { line: usize, q: u64 },
    #[error("graph input must start with a 'vertices:' line")]
    MissingVerticesHeader,
    #[error("line {line}: loop edge ({p}, {p}) is not allowed")]
    LoopEdge { line: usize, p: u64 },
    #[error("line {line}: {value} is not declared in the vertices line")]
    UndeclaredVertex { line: usize, value: u64 },
    #[error("line {line}: duplicate edge ({from}, {to})")]
    DuplicateEdge { line: usize, from: u64, to: u64 },
    #[error("line {line}: duplicate vertex {value}")]
    DuplicateVertex { line: usize, value: u64 },
}

/// Numbered content lines: comments stripped, blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            None
        } else {
            Some((i + 1, content))
        }
    })
}

fn parse_prime(line: usize, token: &str) -> Result<Prime, ParseError> {
    let value: u64 = token.parse().map_err(|_| ParseError::InvalidNumber {
        line,
        token: token.to_string(),
    })?;
    if !is_prime(value) {
        return Err(ParseError::NotPrime { line, value });
    }
    Ok(Prime::new(value).expect("just validated"))
}

/// Parses a local formation definition. The support is the set of
/// line heads; every listed member must itself be a line head.
pub fn parse_formation_file(text: &str) -> Result<LocalFormationSpec, ParseError> {
    let mut entries: BTreeMap<Prime, Vec<(usize, Prime)>> = BTreeMap::new();
    for (line, content) in content_lines(text) {
        let (head, rest) = content.split_once(':').ok_or(ParseError::MalformedLine {
            line,
            expected: "'<p>: <q1> <q2> ...'",
        })?;
        let p = parse_prime(line, head.trim())?;
        if entries.contains_key(&p) {
            return Err(ParseError::DuplicateHead { line, p: p.get() });
        }
        let mut members = Vec::new();
        for token in rest.split_whitespace() {
            members.push((line, parse_prime(line, token)?));
        }
        if !members.iter().any(|(_, q)| *q == p) {
            return Err(ParseError::HeadNotMember { line, p: p.get() });
        }
        entries.insert(p, members);
    }

    let pi: PrimeSet = entries.keys().copied().collect();
    let mut local_def: BTreeMap<Prime, PrimeSet> = BTreeMap::new();
    for (p, members) in &entries {
        let mut set = PrimeSet::new();
        for (line, q) in members {
            if !pi.contains(*q) {
                return Err(ParseError::OutsideSupport {
                    line: *line,
                    q: q.get(),
                });
            }
            set.insert(*q);
        }
        local_def.insert(*p, set);
    }
    Ok(LocalFormationSpec::new(local_def).expect("parser enforced the invariants"))
}

/// Parses a prime graph. In strict mode duplicate vertices and edges
/// are errors; otherwise they are reported back as warnings and
/// ignored.
pub fn parse_graph_file(
    text: &str,
    strict: bool,
) -> Result<(CriticalGraph, Vec<String>), ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingVerticesHeader)?;
    let vertex_tokens = header
        .strip_prefix("vertices:")
        .ok_or(ParseError::MissingVerticesHeader)?;

    let mut g = CriticalGraph::new();
    let mut warnings = Vec::new();
    for token in vertex_tokens.split_whitespace() {
        let v = parse_prime(header_line, token)?;
        if !g.insert_vertex(v) {
            if strict {
                return Err(ParseError::DuplicateVertex {
                    line: header_line,
                    value: v.get(),
                });
            }
            warnings.push(format!("line {header_line}: duplicate vertex {v} ignored"));
        }
    }

    for (line, content) in lines {
        let (a, b) = content.split_once("->").ok_or(ParseError::MalformedLine {
            line,
            expected: "'<p> -> <q>'",
        })?;
        let from = parse_prime(line, a.trim())?;
        let to = parse_prime(line, b.trim())?;
        if from == to {
            return Err(ParseError::LoopEdge {
                line,
                p: from.get(),
            });
        }
        for endpoint in [from, to] {
            if !g.has_vertex(endpoint) {
                return Err(ParseError::UndeclaredVertex {
                    line,
                    value: endpoint.get(),
                });
            }
        }
        let inserted = g.insert_edge(from, to).expect("loop already rejected");
        if !inserted {
            if strict {
                return Err(ParseError::DuplicateEdge {
                    line,
                    from: from.get(),
                    to: to.get(),
                });
            }
            warnings.push(format!(
                "line {line}: duplicate edge ({from}, {to}) ignored"
            ));
        }
    }
    Ok((g, warnings))
}
