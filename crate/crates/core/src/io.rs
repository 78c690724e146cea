//! Text formats for graphs, certificates and double cycle covers.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.
//!
//! Graph (edge list):
//! ```text
//! n m
//! u v        (m lines, u < v)
//! colors b w (optional: blacks 0..b, whites b..b+w)
//! ```
//! Certificate: `graph`, an edge list, then per drawing `drawing k`, `edges E` with E
//! lines `u v`, `rotation` with one line `v: a b c` per vertex, and optionally
//! `outer: u->v`.
//!
//! Cover: `cover M N`, then per cycle `cycle`, `start S`, `degrees ...`,
//! `blacks ...`, one `quad x y` (or `quad x -`) per cycle edge, one `leaves b: ...`
//! per black, and `end`.
//!
//! Parts (edge sets of a given graph): one `part` line per set, followed by its
//! `u v` lines. A file without any `part` line is a single set.

use std::fmt::Write as _;

use thiserror::Error;

use crate::certify::UncrossedCertificate;
use crate::constructions::{DoubleCycle, DoubleCycleCover};
use crate::embedding::{Dart, EmbeddingError, PlaneDrawing, RotationSystem};
use crate::graph::{Color, EdgeSet, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unexpected end of input: {0}")]
    Eof(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("drawing {drawing}: {source}")]
    Embedding { drawing: usize, source: EmbeddingError },
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines { inner: it.peekable() }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.inner.next().ok_or_else(|| ParseError::Eof(what.to_string()))
    }

    fn peek(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|&(_, l)| l)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(usize, &'a str), ParseError> {
        let (line, l) = self.next(kw)?;
        let mut words = l.split_whitespace();
        if words.next() != Some(kw) {
            return Err(syntax(line, format!("expected `{kw}`")));
        }
        Ok((line, l[kw.len()..].trim()))
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>, ParseError> {
    s.split_whitespace()
        .map(|w| w.parse::<usize>().map_err(|_| syntax(line, format!("`{w}` is not a non-negative integer"))))
        .collect()
}

fn exactly<const K: usize>(line: usize, s: &str) -> Result<[usize; K], ParseError> {
    let v = numbers(line, s)?;
    v.try_into().map_err(|_| syntax(line, format!("expected {K} integers")))
}

fn read_graph(lines: &mut Lines<'_>) -> Result<Graph, ParseError> {
    let (line, l) = lines.next("graph header `n m`")?;
    let [n, m] = exactly::<2>(line, l)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = lines.next("edge line")?;
        let [u, v] = exactly::<2>(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::Eof("edge lines".into()));
    }
    let g = Graph::new(n, edges)?;
    if lines.peek().is_some_and(|l| l.starts_with("colors")) {
        let (line, rest) = lines.expect_keyword("colors")?;
        let [b, w] = exactly::<2>(line, rest)?;
        if b + w != n {
            return Err(syntax(line, format!("colors {b} {w} do not add up to {n} vertices")));
        }
        let coloring = (0..n).map(|v| if v < b { Color::Black } else { Color::White }).collect();
        return Ok(g.with_coloring(coloring)?);
    }
    Ok(g)
}

/// Parses the edge-list format.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines)?;
    if let Some((line, _)) = lines.inner.next() {
        return Err(syntax(line, "trailing content after graph"));
    }
    Ok(g)
}

fn colors_line(g: &Graph) -> Option<(usize, usize)> {
    let c = g.coloring()?;
    let b = c.iter().take_while(|&&x| x == Color::Black).count();
    c[b..].iter().all(|&x| x == Color::White).then_some((b, g.n() - b))
}

/// Writes the edge-list format.
pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    if let Some((b, w)) = colors_line(g) {
        let _ = writeln!(s, "colors {b} {w}");
    }
    s
}

fn parse_dart(line: usize, s: &str) -> Result<Dart, ParseError> {
    let (a, b) = s.split_once("->").ok_or_else(|| syntax(line, "expected `u->v`"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|_| syntax(line, format!("bad vertex `{x}`")));
    Ok(Dart::new(p(a)?, p(b)?))
}

fn read_drawing(lines: &mut Lines<'_>, n: usize, index: usize) -> Result<PlaneDrawing, ParseError> {
    let (line, rest) = lines.expect_keyword("edges")?;
    let [e] = exactly::<1>(line, rest)?;
    let mut listed = Vec::with_capacity(e);
    for _ in 0..e {
        let (line, l) = lines.next("drawn edge line")?;
        let [u, v] = exactly::<2>(line, l)?;
        listed.push((u.min(v), u.max(v)));
    }
    let (rot_line, _) = lines.expect_keyword("rotation")?;
    let mut rot = vec![None; n];
    for _ in 0..n {
        let (line, l) = lines.next("rotation line")?;
        let (v, rest) = l.split_once(':').ok_or_else(|| syntax(line, "expected `v: a b c`"))?;
        let v: usize = v.trim().parse().map_err(|_| syntax(line, "bad vertex id"))?;
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range")));
        }
        if rot[v].is_some() {
            return Err(syntax(line, format!("vertex {v} listed twice")));
        }
        rot[v] = Some(numbers(line, rest)?);
    }
    let rot: Vec<Vec<usize>> = rot.into_iter().map(|r| r.expect("all n vertices listed")).collect();
    let rotation = RotationSystem::new(rot).map_err(|source| ParseError::Embedding { drawing: index, source })?;
    listed.sort_unstable();
    if listed != rotation.edges() {
        return Err(syntax(rot_line, format!("drawing {index}: edge list does not match rotation")));
    }
    let mut outer = None;
    if lines.peek().is_some_and(|l| l.starts_with("outer")) {
        let (line, l) = lines.next("outer")?;
        let rest = l.strip_prefix("outer:").ok_or_else(|| syntax(line, "expected `outer: u->v`"))?;
        outer = Some(parse_dart(line, rest)?);
    }
    PlaneDrawing::new(rotation, outer).map_err(|source| ParseError::Embedding { drawing: index, source })
}

/// Parses a certificate file.
pub fn parse_certificate(text: &str) -> Result<UncrossedCertificate, ParseError> {
    let mut lines = Lines::new(text);
    lines.expect_keyword("graph")?;
    let host = read_graph(&mut lines)?;
    let mut drawings = Vec::new();
    while lines.peek().is_some() {
        let (line, rest) = lines.expect_keyword("drawing")?;
        let [k] = exactly::<1>(line, rest)?;
        if k != drawings.len() {
            return Err(syntax(line, format!("expected drawing {}, found {k}", drawings.len())));
        }
        drawings.push(read_drawing(&mut lines, host.n(), k)?);
    }
    Ok(UncrossedCertificate::new(host, drawings))
}

/// Writes one drawing block.
pub fn write_drawing(s: &mut String, k: usize, d: &PlaneDrawing) {
    let _ = writeln!(s, "drawing {k}");
    let edges = d.drawn_pairs();
    let _ = writeln!(s, "edges {}", edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    let _ = writeln!(s, "rotation");
    for (v, list) in d.rotation().as_lists().iter().enumerate() {
        let _ = write!(s, "{v}:");
        for w in list {
            let _ = write!(s, " {w}");
        }
        s.push('\n');
    }
    if let Some(o) = d.outer_dart() {
        let _ = writeln!(s, "outer: {o}");
    }
}

/// Writes a certificate file.
pub fn write_certificate(c: &UncrossedCertificate) -> String {
    let mut s = String::from("graph\n");
    s.push_str(&write_graph(&c.host));
    for (k, d) in c.drawings.iter().enumerate() {
        write_drawing(&mut s, k, d);
    }
    s
}

/// Writes a cover file.
pub fn write_cover(c: &DoubleCycleCover) -> String {
    let mut s = format!("cover {} {}\n", c.m, c.n);
    for (t, cyc) in c.cycles.iter().enumerate() {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "cycle");
        let _ = writeln!(s, "start {}", c.start_indices[t]);
        let _ = writeln!(s, "degrees {}", join(&c.degree_sequences[t]));
        let _ = writeln!(s, "blacks {}", join(&cyc.black_cycle));
        for &(x, y) in &cyc.quad_whites {
            let _ = match y {
                Some(y) => writeln!(s, "quad {x} {y}"),
                None => writeln!(s, "quad {x} -"),
            };
        }
        for (b, ls) in cyc.black_cycle.iter().zip(&cyc.leaves) {
            let _ = write!(s, "leaves {b}:");
            for w in ls {
                let _ = write!(s, " {w}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "end");
    }
    s
}

/// Parses a cover file.
pub fn parse_cover(text: &str) -> Result<DoubleCycleCover, ParseError> {
    let mut lines = Lines::new(text);
    let (line, rest) = lines.expect_keyword("cover")?;
    let [m, n] = exactly::<2>(line, rest)?;
    let mut cover =
        DoubleCycleCover { m, n, degree_sequences: Vec::new(), start_indices: Vec::new(), cycles: Vec::new() };
    while lines.peek().is_some() {
        lines.expect_keyword("cycle")?;
        let (line, rest) = lines.expect_keyword("start")?;
        let [start] = exactly::<1>(line, rest)?;
        let (line, rest) = lines.expect_keyword("degrees")?;
        let degrees = numbers(line, rest)?;
        let (line, rest) = lines.expect_keyword("blacks")?;
        let blacks = numbers(line, rest)?;
        let k = blacks.len();
        if k < 2 {
            return Err(syntax(line, "a double cycle needs at least two blacks"));
        }
        let mut quads = Vec::with_capacity(k);
        let mut removed = None;
        for i in 0..k {
            let (line, rest) = lines.expect_keyword("quad")?;
            let words: Vec<&str> = rest.split_whitespace().collect();
            if words.len() != 2 {
                return Err(syntax(line, "expected `quad x y` or `quad x -`"));
            }
            let x = numbers(line, words[0])?[0];
            let y = if words[1] == "-" {
                removed = Some(i);
                None
            } else {
                Some(numbers(line, words[1])?[0])
            };
            quads.push((x, y));
        }
        let mut leaves = vec![Vec::new(); k];
        for _ in 0..k {
            let (line, rest) = lines.expect_keyword("leaves")?;
            let (b, ws) = rest.split_once(':').ok_or_else(|| syntax(line, "expected `leaves b: w ...`"))?;
            let b: usize = b.trim().parse().map_err(|_| syntax(line, "bad black id"))?;
            let p =
                blacks.iter().position(|&x| x == b).ok_or_else(|| syntax(line, format!("{b} is not on the cycle")))?;
            leaves[p] = numbers(line, ws)?;
        }
        lines.expect_keyword("end")?;
        cover.start_indices.push(start);
        cover.degree_sequences.push(degrees);
        cover.cycles.push(DoubleCycle { black_cycle: blacks, quad_whites: quads, leaves, removed_white: removed });
    }
    Ok(cover)
}

/// Parses a parts file against `host`.
pub fn parse_parts(text: &str, host: &Graph) -> Result<Vec<EdgeSet>, ParseError> {
    let mut parts: Vec<EdgeSet> = Vec::new();
    for (line, l) in Lines::new(text).inner {
        if l == "part" {
            parts.push(EdgeSet::new(host.m()));
            continue;
        }
        let [u, v] = exactly::<2>(line, l)?;
        let i = host.edge_index(u, v).ok_or_else(|| syntax(line, format!("{u} {v} is not an edge of the graph")))?;
        if parts.is_empty() {
            parts.push(EdgeSet::new(host.m()));
        }
        parts.last_mut().expect("non-empty").insert(i);
    }
    Ok(parts)
}

/// Writes a parts file.
pub fn write_parts(parts: &[EdgeSet], host: &Graph) -> String {
    let mut s = String::new();
    for p in parts {
        s.push_str("part\n");
        for (u, v) in p.pairs(host) {
            let _ = writeln!(s, "{u} {v}");
        }
    }
    s
}
