//! Loop-free multigraphs stored as dense symmetric integer matrices.

use alloc::vec::Vec;

use crate::combin::colex_unrank;
use crate::{Error, Rational, Result};

/// Symmetric nonnegative integer adjacency matrix with zero diagonal.
///
/// Entry `(i, j)` is the number of parallel edges between `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    adj: Vec<u32>,
    subset_size: Option<usize>,
}

impl Multigraph {
    /// The edgeless multigraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            adj: alloc::vec![0; n * n],
            subset_size: None,
        }
    }

    /// Builds from `(u, v, multiplicity)` triples; repeated pairs accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v, m) in edges {
            g.add_edge(u, v, m)?;
        }
        Ok(g)
    }

    /// Builds from a row-major `n * n` matrix, checking symmetry and the
    /// zero diagonal.
    pub fn from_matrix(n: usize, adj: Vec<u32>) -> Result<Self> {
        if adj.len() != n * n {
            return Err(Error::Shape(alloc::format!(
                "{} entries for a {n}x{n} matrix",
                adj.len()
            )));
        }
        for i in 0..n {
            if adj[i * n + i] != 0 {
                return Err(Error::NonZeroDiagonal(i));
            }
            for j in 0..i {
                if adj[i * n + j] != adj[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(Multigraph {
            n,
            adj,
            subset_size: None,
        })
    }

    pub(crate) fn with_subset_size(mut self, s: usize) -> Self {
        self.subset_size = Some(s);
        self
    }

    /// The cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        let mut g = Multigraph::new(n);
        for i in 0..n {
            g.bump(i, (i + 1) % n, 1);
        }
        g
    }

    /// The complete graph `K_n` with every edge of multiplicity `m`.
    pub fn complete(n: usize, m: u32) -> Self {
        let mut g = Multigraph::new(n);
        for i in 0..n {
            for j in 0..i {
                g.bump(i, j, m);
            }
        }
        g
    }

    /// The Petersen graph, as the Kneser graph on 2-subsets of a 5-set
    /// (vertices in colex order).
    pub fn petersen() -> Self {
        let mut g = Multigraph::new(10);
        for i in 0..10 {
            let a = colex_unrank(i, 2);
            for j in 0..i {
                let b = colex_unrank(j, 2);
                if a.iter().all(|x| !b.contains(x)) {
                    g.bump(i, j, 1);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize, m: u32) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w as u32,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::NonZeroDiagonal(u));
        }
        self.bump(u, v, m);
        Ok(())
    }

    #[inline]
    pub(crate) fn bump(&mut self, u: usize, v: usize, m: u32) {
        self.adj[u * self.n + v] += m;
        self.adj[v * self.n + u] += m;
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.adj[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.adj[i * self.n..(i + 1) * self.n]
    }

    pub fn matrix(&self) -> &[u32] {
        &self.adj
    }

    /// For an s-set graph, the subset size `s` its vertices stand for.
    pub fn subset_size(&self) -> Option<usize> {
        self.subset_size
    }

    /// The `s`-subset that vertex `i` of an s-set graph represents.
    pub fn vertex_label(&self, i: usize) -> Option<Vec<usize>> {
        self.subset_size.map(|s| colex_unrank(i, s))
    }

    /// Pairs `(i, j, multiplicity)` with `i < j` and nonzero multiplicity.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n).filter_map(move |j| {
                let m = self.get(i, j);
                (m > 0).then_some((i, j, m))
            })
        })
    }

    /// Total number of edges counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.adj.iter().map(|&m| m as u64).sum::<u64>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&m| m == 0)
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&m| m as u64).sum())
            .collect()
    }

    pub fn max_degree(&self) -> u64 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `2|E| / n` with multiplicity, exact; `0` when `n == 0`.
    pub fn average_degree(&self) -> Rational {
        if self.n == 0 {
            return Rational::from_integer(0);
        }
        Rational::new(2 * self.total_multiplicity() as i64, self.n as i64)
    }
}
