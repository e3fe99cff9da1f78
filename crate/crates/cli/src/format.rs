//! Text input formats.
//!
//! All formats are whitespace separated, one record per line. Everything after
//! `#` is a comment and blank lines are skipped. Vertices are 1-indexed.
//!
//! ```text
//! bipartite:  nL nR m        then m lines  u v [cost]
//! multigraph: n m            then m lines  u v [cost]
//! flow:       n m nS nT      then a line of nS sources, a line of nT sinks,
//!                            then m lines  u v cap
//! polygon:    N              then N lines  xp yp t
//! ```

use std::fmt;
use std::str::FromStr;

use netclass::decimal::Decimal;

/// Parse failure tied to a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

type Result<T> = std::result::Result<T, FormatError>;

struct Record<'a> {
    line: usize,
    fields: Vec<&'a str>,
}

impl<'a> Record<'a> {
    fn error(&self, message: impl Into<String>) -> FormatError {
        FormatError { line: self.line, message: message.into() }
    }

    fn arity(&self, min: usize, max: usize) -> Result<()> {
        let n = self.fields.len();
        if n < min || n > max {
            let want = if min == max { min.to_string() } else { format!("{min} to {max}") };
            return Err(self.error(format!("expected {want} fields, found {n}")));
        }
        Ok(())
    }

    fn parse<T: FromStr>(&self, i: usize, what: &str) -> Result<T> {
        self.fields[i].parse().map_err(|_| self.error(format!("invalid {what} '{}'", self.fields[i])))
    }

    fn vertex(&self, i: usize, n: usize) -> Result<usize> {
        let v: usize = self.parse(i, "vertex")?;
        if v == 0 || v > n {
            return Err(self.error(format!("vertex {v} out of range 1..={n}")));
        }
        Ok(v)
    }

    fn cost(&self, i: usize) -> Result<Decimal> {
        let c: Decimal = self.parse(i, "cost")?;
        if c.is_negative() {
            return Err(self.error(format!("negative cost {c}")));
        }
        Ok(c)
    }

    fn real(&self, i: usize, what: &str) -> Result<f64> {
        let x: f64 = self.parse(i, what)?;
        if !x.is_finite() {
            return Err(self.error(format!("non-finite {what} '{}'", self.fields[i])));
        }
        Ok(x)
    }
}

struct Records<'a> {
    iter: std::vec::IntoIter<Record<'a>>,
    last_line: usize,
}

impl<'a> Records<'a> {
    fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let records: Vec<Record<'a>> = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                last_line = i + 1;
                let content = raw.split('#').next().unwrap_or("");
                let fields: Vec<&str> = content.split_whitespace().collect();
                (!fields.is_empty()).then_some(Record { line: i + 1, fields })
            })
            .collect();
        Records { iter: records.into_iter(), last_line }
    }

    fn next(&mut self, what: &str) -> Result<Record<'a>> {
        self.iter.next().ok_or_else(|| FormatError {
            line: self.last_line + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn finish(mut self) -> Result<()> {
        match self.iter.next() {
            Some(r) => Err(r.error("unexpected extra line")),
            None => Ok(()),
        }
    }
}

/// Edge list with optional per-edge costs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub cost: Option<Decimal>,
}

fn edge_records(records: &mut Records<'_>, m: usize, nu: usize, nv: usize, cost_required: bool) -> Result<Vec<EdgeRecord>> {
    (0..m)
        .map(|_| {
            let r = records.next("an edge line")?;
            r.arity(if cost_required { 3 } else { 2 }, 3)?;
            let cost = if r.fields.len() == 3 { Some(r.cost(2)?) } else { None };
            Ok(EdgeRecord { u: r.vertex(0, nu)?, v: r.vertex(1, nv)?, cost })
        })
        .collect()
}

fn write_edges(f: &mut fmt::Formatter<'_>, edges: &[EdgeRecord]) -> fmt::Result {
    for e in edges {
        match e.cost {
            Some(c) => writeln!(f, "{} {} {c}", e.u, e.v)?,
            None => writeln!(f, "{} {}", e.u, e.v)?,
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteFile {
    pub left_count: usize,
    pub right_count: usize,
    /// `u` is a left vertex, `v` a right vertex.
    pub edges: Vec<EdgeRecord>,
}

impl BipartiteFile {
    pub fn parse(text: &str, cost_required: bool) -> Result<Self> {
        let mut records = Records::new(text);
        let head = records.next("header 'nL nR m'")?;
        head.arity(3, 3)?;
        let (nl, nr, m) = (head.parse(0, "count")?, head.parse(1, "count")?, head.parse(2, "count")?);
        let edges = edge_records(&mut records, m, nl, nr, cost_required)?;
        records.finish()?;
        Ok(BipartiteFile { left_count: nl, right_count: nr, edges })
    }
}

impl fmt::Display for BipartiteFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.left_count, self.right_count, self.edges.len())?;
        write_edges(f, &self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigraphFile {
    pub vertex_count: usize,
    pub edges: Vec<EdgeRecord>,
}

impl MultigraphFile {
    pub fn parse(text: &str, cost_required: bool) -> Result<Self> {
        let mut records = Records::new(text);
        let head = records.next("header 'n m'")?;
        head.arity(2, 2)?;
        let (n, m) = (head.parse(0, "count")?, head.parse(1, "count")?);
        let edges = edge_records(&mut records, m, n, n, cost_required)?;
        records.finish()?;
        Ok(MultigraphFile { vertex_count: n, edges })
    }
}

impl fmt::Display for MultigraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.vertex_count, self.edges.len())?;
        write_edges(f, &self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowFile {
    pub vertex_count: usize,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub arcs: Vec<(usize, usize, i64)>,
}

impl FlowFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Records::new(text);
        let head = records.next("header 'n m nS nT'")?;
        head.arity(4, 4)?;
        let n: usize = head.parse(0, "count")?;
        let m: usize = head.parse(1, "count")?;
        let ns: usize = head.parse(2, "count")?;
        let nt: usize = head.parse(3, "count")?;
        let mut terminals = |k: usize, what: &str| -> Result<Vec<usize>> {
            let r = records.next(what)?;
            r.arity(k, k)?;
            (0..k).map(|i| r.vertex(i, n)).collect()
        };
        let sources = terminals(ns, "the source line")?;
        let sinks = terminals(nt, "the sink line")?;
        let arcs = (0..m)
            .map(|_| {
                let r = records.next("an arc line")?;
                r.arity(3, 3)?;
                let cap: i64 = r.parse(2, "integer capacity")?;
                if cap < 0 {
                    return Err(r.error(format!("negative capacity {cap}")));
                }
                Ok((r.vertex(0, n)?, r.vertex(1, n)?, cap))
            })
            .collect::<Result<Vec<_>>>()?;
        records.finish()?;
        Ok(FlowFile { vertex_count: n, sources, sinks, arcs })
    }
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for FlowFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {} {}", self.vertex_count, self.arcs.len(), self.sources.len(), self.sinks.len())?;
        writeln!(f, "{}", join(&self.sources))?;
        writeln!(f, "{}", join(&self.sinks))?;
        for (u, v, cap) in &self.arcs {
            writeln!(f, "{u} {v} {cap}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolygonFile {
    /// `(xp, yp, t)` per edge.
    pub rows: Vec<(f64, f64, f64)>,
}

impl PolygonFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Records::new(text);
        let head = records.next("header 'N'")?;
        head.arity(1, 1)?;
        let n: usize = head.parse(0, "count")?;
        let rows = (0..n)
            .map(|_| {
                let r = records.next("a point line")?;
                r.arity(3, 3)?;
                Ok((r.real(0, "coordinate")?, r.real(1, "coordinate")?, r.real(2, "ratio")?))
            })
            .collect::<Result<Vec<_>>>()?;
        records.finish()?;
        Ok(PolygonFile { rows })
    }
}

impl fmt::Display for PolygonFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rows.len())?;
        for (x, y, t) in &self.rows {
            writeln!(f, "{x:?} {y:?} {t:?}")?;
        }
        Ok(())
    }
}
