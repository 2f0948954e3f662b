// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Edge-list and DIMACS readers.
//!
//! Edge-list documents start with a header line `n m` followed by exactly `m`
//! lines `u v` (0-based). Lines whose first non-blank character is `#` and
//! blank lines are skipped. DIMACS documents use `c` comments, a `p edge n m`
//! header and 1-based `e u v` lines.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    Malformed(String),
    EmptyGraph,
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    EdgeCountMismatch { declared: usize, found: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing header line"),
            ParseErrorKind::Malformed(line) => write!(f, "malformed line {line:?}"),
            ParseErrorKind::EmptyGraph => write!(f, "graph must have at least one vertex"),
            ParseErrorKind::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range 0..{n}")
            }
            ParseErrorKind::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            ParseErrorKind::DuplicateEdge(u, v) => write!(f, "duplicate edge {{{u}, {v}}}"),
            ParseErrorKind::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges but {found} were given")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number in the source document.
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_pair(line_no: usize, text: &str, fields: &[&str]) -> Result<(usize, usize), ParseError> {
    let malformed = || err(line_no, ParseErrorKind::Malformed(text.to_string()));
    match fields {
        [a, b] => Ok((
            a.parse().map_err(|_| malformed())?,
            b.parse().map_err(|_| malformed())?,
        )),
        _ => Err(malformed()),
    }
}

struct EdgeCollector {
    n: usize,
    declared: usize,
    seen: HashSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl EdgeCollector {
    fn new(line: usize, n: usize, declared: usize) -> Result<Self, ParseError> {
        if n == 0 {
            return Err(err(line, ParseErrorKind::EmptyGraph));
        }
        Ok(EdgeCollector {
            n,
            declared,
            seen: HashSet::new(),
            edges: Vec::new(),
        })
    }

    fn push(&mut self, line: usize, u: usize, v: usize) -> Result<(), ParseError> {
        if self.edges.len() == self.declared {
            return Err(err(
                line,
                ParseErrorKind::EdgeCountMismatch {
                    declared: self.declared,
                    found: self.declared + 1,
                },
            ));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(err(line, ParseErrorKind::VertexOutOfRange { vertex: x, n: self.n }));
            }
        }
        if u == v {
            return Err(err(line, ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !self.seen.insert(key) {
            return Err(err(line, ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<Graph, ParseError> {
        if self.edges.len() != self.declared {
            return Err(err(
                last_line,
                ParseErrorKind::EdgeCountMismatch {
                    declared: self.declared,
                    found: self.edges.len(),
                },
            ));
        }
        Ok(Graph::from_edges(self.n, self.edges).expect("edges validated while parsing"))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut collector: Option<EdgeCollector> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (a, b) = parse_pair(line_no, line, &fields)?;
        match collector.as_mut() {
            None => collector = Some(EdgeCollector::new(line_no, a, b)?),
            Some(c) => c.push(line_no, a, b)?,
        }
    }
    collector
        .ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?
        .finish(last_line)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut collector: Option<EdgeCollector> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let malformed = || err(line_no, ParseErrorKind::Malformed(line.to_string()));
        match (fields[0], collector.as_mut()) {
            ("p", None) => {
                if fields.len() != 4 {
                    return Err(malformed());
                }
                let (n, m) = parse_pair(line_no, line, &fields[2..])?;
                collector = Some(EdgeCollector::new(line_no, n, m)?);
            }
            ("e", Some(c)) => {
                let (u, v) = parse_pair(line_no, line, &fields[1..])?;
                if u == 0 || v == 0 {
                    return Err(malformed());
                }
                c.push(line_no, u - 1, v - 1)?;
            }
            ("e", None) => return Err(err(line_no, ParseErrorKind::MissingHeader)),
            _ => return Err(malformed()),
        }
    }
    collector
        .ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?
        .finish(last_line)
}
