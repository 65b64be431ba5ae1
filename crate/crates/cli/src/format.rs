//! Plain-text hypergraph files and multigraph exports.
//!
//! A hypergraph file starts with a header line `n m r` (vertex count, edge
//! count, uniformity, `r = 0` for mixed edge sizes) followed by `m` lines of
//! space-separated 0-based vertex ids. Blank lines and lines starting with
//! `#` are ignored.

use std::fmt::Write as _;

use hypercert::{Hypergraph, Multigraph};

#[derive(Debug, thiserror::Error, PartialEq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>, ParseError> {
    text.split_whitespace()
        .map(|tok| tok.parse::<u64>().map_err(|_| err(line, format!("not a nonnegative integer: {tok:?}"))))
        .collect()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header line \"n m r\""))?;
    let header = numbers(hline, header)?;
    let [n, m, r] = header[..] else {
        return Err(err(hline, "header must be \"n m r\""));
    };
    let n = usize::try_from(n).map_err(|_| err(hline, "vertex count too large"))?;
    if r == 1 {
        return Err(err(hline, "uniformity must be 0 or at least 2"));
    }

    let mut edges = Vec::with_capacity(m.min(1 << 20) as usize);
    for (line, text) in lines {
        if edges.len() as u64 == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        let ids = numbers(line, text)?;
        if r != 0 && ids.len() as u64 != r {
            return Err(err(line, format!("expected {r} vertex ids, found {}", ids.len())));
        }
        let mut edge = Vec::with_capacity(ids.len());
        for id in ids {
            if id >= n as u64 {
                return Err(err(line, format!("vertex {id} out of range for {n} vertices")));
            }
            if edge.contains(&(id as u32)) {
                return Err(err(line, format!("vertex {id} repeated within an edge")));
            }
            edge.push(id as u32);
        }
        if edge.len() < 2 {
            return Err(err(line, "an edge needs at least 2 vertices"));
        }
        edges.push(edge);
    }
    if (edges.len() as u64) < m {
        return Err(err(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    let built = if r == 0 {
        Hypergraph::new(n, edges)
    } else {
        Hypergraph::uniform(n, r as usize, edges)
    };
    built.map_err(|e| err(hline, e.to_string()))
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let r = h.uniformity().unwrap_or(0);
    let mut out = format!("{} {} {}\n", h.vertex_count(), h.edge_count(), r);
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Multigraph export layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    /// `n` on the first line, then `n` rows of the adjacency matrix.
    Matrix,
    /// `n e` header, then one `u v multiplicity` line per adjacent pair.
    Edges,
}

pub fn write_multigraph(g: &Multigraph, format: GraphFormat) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    match format {
        GraphFormat::Matrix => {
            writeln!(out, "{n}").unwrap();
            for i in 0..n {
                let row: Vec<String> = g.row(i).iter().map(u32::to_string).collect();
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
        }
        GraphFormat::Edges => {
            let edges: Vec<_> = g.edges().collect();
            writeln!(out, "{n} {}", edges.len()).unwrap();
            if let Some(s) = g.subset_size() {
                writeln!(out, "# vertices are {s}-subsets in colex order").unwrap();
            }
            for (u, v, m) in edges {
                writeln!(out, "{u} {v} {m}").unwrap();
            }
        }
    }
    out
}
