//! Projections of a hypergraph onto multigraphs.

use alloc::vec::Vec;

use crate::combin::{binomial, colex_rank, pair_rank, Combinations};
use crate::{Coloring, Error, Hypergraph, Multigraph, Result};

/// Default cap on the vertex count of a projected multigraph.
pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// The underlying graph: one edge `{u, v}` for every hyperedge containing
/// both `u` and `v`.
pub fn underlying_graph(h: &Hypergraph) -> Multigraph {
    let mut g = Multigraph::new(h.vertex_count());
    for e in h.edges() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                g.bump(u as usize, v as usize, 1);
            }
        }
    }
    g
}

/// The `s`-set graph on all `C(n, s)` `s`-subsets, indexed by colex rank.
///
/// Two disjoint subsets are joined once per hyperedge containing their
/// union; intersecting subsets are never adjacent.
pub fn sset_graph(h: &Hypergraph, s: usize, vertex_cap: usize) -> Result<Multigraph> {
    if s == 0 {
        return Err(Error::InvalidArgument("subset size must be at least 1".into()));
    }
    let max_edge = h.edges().iter().map(Vec::len).max().unwrap_or(0);
    if !h.edges().is_empty() && 2 * s > max_edge {
        return Err(Error::InvalidArgument(alloc::format!(
            "2s = {} exceeds the largest edge size {max_edge}",
            2 * s
        )));
    }
    let size = binomial(h.vertex_count() as u64, s as u64);
    if size > vertex_cap as u64 {
        return Err(Error::CapExceeded {
            size,
            cap: vertex_cap as u64,
        });
    }
    let mut g = Multigraph::new(size as usize).with_subset_size(s);
    let mut left = Vec::with_capacity(s);
    let mut right = Vec::with_capacity(s);
    for e in h.edges() {
        for union in Combinations::new(e.len(), 2 * s) {
            // the split containing union[0] on the left visits each
            // unordered pair {A, B} exactly once
            for rest in Combinations::new(2 * s - 1, s - 1) {
                left.clear();
                right.clear();
                left.push(e[union[0]] as usize);
                let mut it = rest.iter().peekable();
                for (pos, &idx) in union.iter().enumerate().skip(1) {
                    if it.peek().is_some_and(|&&r| r + 1 == pos) {
                        it.next();
                        left.push(e[idx] as usize);
                    } else {
                        right.push(e[idx] as usize);
                    }
                }
                g.bump(colex_rank(&left), colex_rank(&right), 1);
            }
        }
    }
    Ok(g)
}

/// Colors the pair-vertex `{a, b}` with 0 when `a` and `b` share a color
/// and 1 otherwise. Indices follow the colex order used by [`sset_graph`].
pub fn induced_pair_coloring(c: &Coloring, n: usize) -> Result<Coloring> {
    if c.k() != 2 {
        return Err(Error::WrongColorCount {
            expected: 2,
            got: c.k(),
        });
    }
    c.require_len(n)?;
    let mut colors = alloc::vec![0u32; binomial(n as u64, 2) as usize];
    for b in 1..n {
        for a in 0..b {
            colors[pair_rank(a, b)] = u32::from(c.color(a) != c.color(b));
        }
    }
    Coloring::new(colors, 2)
}
