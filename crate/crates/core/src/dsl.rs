//! A small line-oriented language for resolution graphs.
//!
//! ```text
//! # comments run to the end of the line
//! vertex a -2          # curve `a` with self-intersection -2
//! vertex b -3
//! edge a b
//! chain -2 -3 -2       # vertices v0 v1 v2 joined in a path
//! star -2 : [-3] [-3] [-2 -2]
//! ```
//!
//! `chain` and `star` name their vertices `v0, v1, ...` exactly as
//! [`WeightedDualGraph::chain`] and [`WeightedDualGraph::star`] do, so they
//! can be combined with explicit `edge` lines that refer to those ids.
//! Using two shorthands in one document reuses the same ids and is
//! reported as a duplicate vertex.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::GraphError;
use crate::graph::WeightedDualGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    Graph(GraphError),
}

/// Error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }

    fn graph(pos: Pos, err: GraphError) -> Self {
        ParseError {
            line: pos.line,
            col: pos.col,
            kind: ParseErrorKind::Graph(err),
        }
    }

    /// `syntax_error` or the code of the underlying graph error.
    pub fn code(&self) -> &'static str {
        match &self.kind {
            ParseErrorKind::Syntax(_) => "syntax_error",
            ParseErrorKind::Graph(g) => g.code(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => {
                write!(f, "{}:{}: syntax error: {msg}", self.line, self.col)
            }
            ParseErrorKind::Graph(err) => write!(f, "{}:{}: {err}", self.line, self.col),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    col: usize,
}

/// Splits on whitespace, with `:`, `[` and `]` as tokens of their own.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    fn push<'a>(out: &mut Vec<Token<'a>>, line: &'a str, s: usize, e: usize) {
        out.push(Token {
            text: &line[s..e],
            col: line[..s].chars().count() + 1,
        })
    }
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        let special = matches!(ch, ':' | '[' | ']');
        if ch.is_whitespace() || special {
            if let Some(s) = start.take() {
                push(&mut out, line, s, i);
            }
            if special {
                push(&mut out, line, i, i + ch.len_utf8());
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        push(&mut out, line, s, line.len());
    }
    out
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && !s.starts_with('-')
        && s.chars()
            .all(|c| !c.is_whitespace() && !matches!(c, '#' | ':' | '[' | ']'))
}

struct Builder {
    vertices: Vec<(String, i64)>,
    vertex_pos: HashMap<String, Pos>,
    edges: Vec<(String, String)>,
    edge_pos: Vec<Pos>,
    edge_keys: HashSet<(String, String)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            vertices: Vec::new(),
            vertex_pos: HashMap::new(),
            edges: Vec::new(),
            edge_pos: Vec::new(),
            edge_keys: HashSet::new(),
        }
    }

    fn vertex(&mut self, id: String, weight: i64, pos: Pos, weight_pos: Pos) -> Result<(), ParseError> {
        if self.vertex_pos.contains_key(&id) {
            return Err(ParseError::graph(pos, GraphError::DuplicateVertex(id)));
        }
        if weight < 1 {
            return Err(ParseError::graph(
                weight_pos,
                GraphError::NonPositiveWeight(id, weight),
            ));
        }
        self.vertex_pos.insert(id.clone(), pos);
        self.vertices.push((id, weight));
        Ok(())
    }

    fn edge(&mut self, a: String, b: String, pos: Pos) -> Result<(), ParseError> {
        if a == b {
            return Err(ParseError::graph(pos, GraphError::SelfLoop(a)));
        }
        let key = if a < b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if !self.edge_keys.insert(key) {
            return Err(ParseError::graph(pos, GraphError::DuplicateEdge(a, b)));
        }
        self.edges.push((a, b));
        self.edge_pos.push(pos);
        Ok(())
    }

    fn finish(self) -> Result<WeightedDualGraph, ParseError> {
        for ((a, b), &pos) in self.edges.iter().zip(&self.edge_pos) {
            for id in [a, b] {
                if !self.vertex_pos.contains_key(id) {
                    return Err(ParseError::graph(pos, GraphError::UnknownEndpoint(id.clone())));
                }
            }
        }
        WeightedDualGraph::new(self.vertices, self.edges).map_err(|err| {
            let pos = match &err {
                GraphError::Disconnected(id, _) => self.vertex_pos[id],
                _ => Pos { line: 1, col: 1 },
            };
            ParseError::graph(pos, err)
        })
    }
}

/// Parses a self-intersection token into a weight `b = -E^2`.
fn weight_of(tok: &Token<'_>, line: usize) -> Result<i64, ParseError> {
    let value: i64 = tok.text.parse().map_err(|_| {
        ParseError::syntax(
            line,
            tok.col,
            format!("expected an integer self-intersection, found `{}`", tok.text),
        )
    })?;
    value
        .checked_neg()
        .ok_or_else(|| ParseError::syntax(line, tok.col, "self-intersection out of range"))
}

/// Parses a graph document. Errors carry the line and column of the
/// offending token.
pub fn parse_graph(text: &str) -> Result<WeightedDualGraph, ParseError> {
    let mut builder = Builder::new();
    let mut shorthand;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content);
        let Some(head) = tokens.first() else {
            continue;
        };
        let at = |t: &Token<'_>| Pos { line, col: t.col };
        match head.text {
            "vertex" => {
                let [_, id, w] = tokens.as_slice() else {
                    return Err(ParseError::syntax(
                        line,
                        head.col,
                        "expected `vertex <id> <self-intersection>`",
                    ));
                };
                if !is_identifier(id.text) {
                    return Err(ParseError::syntax(
                        line,
                        id.col,
                        format!("invalid vertex id `{}`", id.text),
                    ));
                }
                let weight = weight_of(w, line)?;
                builder.vertex(id.text.to_string(), weight, at(id), at(w))?;
            }
            "edge" => {
                let [_, a, b] = tokens.as_slice() else {
                    return Err(ParseError::syntax(line, head.col, "expected `edge <id> <id>`"));
                };
                for t in [a, b] {
                    if !is_identifier(t.text) {
                        return Err(ParseError::syntax(
                            line,
                            t.col,
                            format!("invalid vertex id `{}`", t.text),
                        ));
                    }
                }
                builder.edge(a.text.to_string(), b.text.to_string(), at(head))?;
            }
            "chain" => {
                if tokens.len() < 2 {
                    return Err(ParseError::syntax(
                        line,
                        head.col,
                        "`chain` needs at least one self-intersection",
                    ));
                }
                shorthand = 0;
                let mut prev: Option<String> = None;
                for t in &tokens[1..] {
                    let w = weight_of(t, line)?;
                    let id = format!("v{shorthand}");
                    shorthand += 1;
                    builder.vertex(id.clone(), w, at(t), at(t))?;
                    if let Some(p) = prev {
                        builder.edge(p, id.clone(), at(t))?;
                    }
                    prev = Some(id);
                }
            }
            "star" => {
                let center = tokens.get(1).ok_or_else(|| {
                    ParseError::syntax(line, head.col, "`star` needs a central self-intersection")
                })?;
                let w = weight_of(center, line)?;
                shorthand = 0;
                builder.vertex("v0".into(), w, at(center), at(center))?;
                shorthand += 1;
                match tokens.get(2) {
                    Some(t) if t.text == ":" => {}
                    Some(t) => {
                        return Err(ParseError::syntax(
                            line,
                            t.col,
                            format!("expected `:`, found `{}`", t.text),
                        ))
                    }
                    None => {
                        return Err(ParseError::syntax(
                            line,
                            content.len() + 1,
                            "expected `:` after the center",
                        ))
                    }
                }
                let mut rest = tokens[3..].iter();
                let mut arms = 0;
                while let Some(open) = rest.next() {
                    if open.text != "[" {
                        return Err(ParseError::syntax(
                            line,
                            open.col,
                            format!("expected `[`, found `{}`", open.text),
                        ));
                    }
                    let mut prev = "v0".to_string();
                    let mut len = 0;
                    loop {
                        let Some(t) = rest.next() else {
                            return Err(ParseError::syntax(line, open.col, "unclosed `[`"));
                        };
                        if t.text == "]" {
                            break;
                        }
                        let w = weight_of(t, line)?;
                        let id = format!("v{shorthand}");
                        shorthand += 1;
                        builder.vertex(id.clone(), w, at(t), at(t))?;
                        builder.edge(prev, id.clone(), at(t))?;
                        prev = id;
                        len += 1;
                    }
                    if len == 0 {
                        return Err(ParseError::syntax(line, open.col, "empty arm"));
                    }
                    arms += 1;
                }
                if arms == 0 {
                    return Err(ParseError::syntax(
                        line,
                        head.col,
                        "`star` needs at least one arm",
                    ));
                }
            }
            other => {
                return Err(ParseError::syntax(
                    line,
                    head.col,
                    format!("unknown statement `{other}` (expected vertex, edge, chain or star)"),
                ));
            }
        }
    }
    if builder.vertices.is_empty() {
        return Err(ParseError::graph(Pos { line: 1, col: 1 }, GraphError::Empty));
    }
    builder.finish()
}

/// Explicit `vertex`/`edge` form of a graph. Ids that are not valid tokens
/// are replaced by `v<index>`.
pub fn emit(g: &WeightedDualGraph) -> String {
    let usable = g.ids().iter().all(|id| is_identifier(id));
    let name = |i: usize| {
        if usable {
            g.id(i).to_string()
        } else {
            format!("v{i}")
        }
    };
    let mut out = String::new();
    for i in 0..g.len() {
        out.push_str(&format!("vertex {} {}\n", name(i), -g.weight(i)));
    }
    for &(a, b) in g.edges() {
        out.push_str(&format!("edge {} {}\n", name(a), name(b)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn explicit_a2() {
        let g = parse_graph("vertex a -2\nvertex b -2\nedge a b").unwrap();
        assert_eq!(g.weights(), &[2, 2]);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn shorthands() {
        let g = parse_graph("chain -2 -3 -2").unwrap();
        assert_eq!(g, WeightedDualGraph::chain(&[2, 3, 2]).unwrap());
        let g = parse_graph("star -2 : [-3] [-3] [-2]").unwrap();
        assert_eq!(g.weights(), &[2, 3, 3, 2]);
        assert_eq!(
            crate::quotient::pd_divisor(&g).unwrap(),
            crate::quotient::pd_divisor(&fixtures::ding_item(2)).unwrap()
        );
        let g = parse_graph("star -3:[-2 -2][-2]").unwrap();
        assert_eq!(g, WeightedDualGraph::star(3, &[vec![2, 2], vec![2]]).unwrap());
    }

    #[test]
    fn shorthand_with_extra_edges() {
        let g = parse_graph("chain -2 -3 -2 -3 # spine\nvertex x -2\nedge v2 x\n").unwrap();
        assert_eq!(g.weights(), fixtures::non_ulrich_quotient().weights());
        assert_eq!(g.edges(), fixtures::non_ulrich_quotient().edges());
    }

    #[test]
    fn errors_have_positions() {
        let e = parse_graph("vertex a -2\nvertex a -3").unwrap_err();
        assert_eq!((e.line, e.col), (2, 8));
        assert_eq!(
            e.kind,
            ParseErrorKind::Graph(GraphError::DuplicateVertex("a".into()))
        );

        let e = parse_graph("vertex a -2\nedge a b").unwrap_err();
        assert_eq!((e.line, e.code()), (2, "unknown_endpoint"));

        let e = parse_graph("vertex a 2").unwrap_err();
        assert_eq!((e.line, e.col, e.code()), (1, 10, "non_positive_weight"));

        let e = parse_graph("vertex a -2\nvertex b -2\n\nedge a b\nedge b a").unwrap_err();
        assert_eq!((e.line, e.code()), (5, "duplicate_edge"));

        let e = parse_graph("vertex a -2\nvertex b -2").unwrap_err();
        assert_eq!((e.line, e.col, e.code()), (2, 8, "disconnected"));

        let e = parse_graph("  vertx a -2").unwrap_err();
        assert_eq!((e.line, e.col, e.code()), (1, 3, "syntax_error"));

        let e = parse_graph("star -2 : [-2 -x]").unwrap_err();
        assert_eq!((e.col, e.code()), (15, "syntax_error"));

        let e = parse_graph("# nothing\n").unwrap_err();
        assert_eq!(e.code(), "empty_graph");

        let e = parse_graph("chain -2\nchain -2").unwrap_err();
        assert_eq!(e.code(), "duplicate_vertex");
    }

    #[test]
    fn round_trip() {
        for g in [
            fixtures::e8(),
            fixtures::rtp_d0(),
            fixtures::heavy_coefficient_two(),
        ] {
            assert_eq!(parse_graph(&emit(&g)).unwrap(), g);
        }
        let odd = WeightedDualGraph::new([("a b", 2), ("c", 3)], [("a b", "c")]).unwrap();
        let back = parse_graph(&emit(&odd)).unwrap();
        assert_eq!(back.weights(), odd.weights());
        assert_eq!(back.edges(), odd.edges());
    }
}
