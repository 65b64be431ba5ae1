//! Hypergraphs, vertex colorings and split-type accounting.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::combin::{binomial, Combinations};
use crate::{Error, Rational, Result};

/// A hypergraph on vertices `0..n` with a multiset of hyperedges.
///
/// Each edge is stored sorted ascending with at least two distinct
/// vertices. Duplicate edges are kept and count with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    rank: Option<usize>,
    edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting every edge. The uniformity is inferred
    /// when the edge list is nonempty and all edges share a size.
    pub fn new(n: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .map(|e| normalize_edge(n, e))
            .collect::<Result<Vec<_>>>()?;
        let rank = match edges.first() {
            Some(first) if edges.iter().all(|e| e.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        Ok(Hypergraph { n, rank, edges })
    }

    /// Builds an `r`-uniform hypergraph. The uniformity is recorded even
    /// when `edges` is empty.
    pub fn uniform(n: usize, r: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::EdgeTooSmall(r));
        }
        let mut h = Hypergraph::new(n, edges)?;
        if h.edges.iter().any(|e| e.len() != r) {
            return Err(Error::NotUniform { expected: r });
        }
        h.rank = Some(r);
        Ok(h)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The common edge size, if the hypergraph is known to be uniform.
    pub fn uniformity(&self) -> Option<usize> {
        self.rank
    }

    pub fn is_uniform_of(&self, r: usize) -> bool {
        match self.rank {
            Some(k) => k == r,
            None => self.edges.is_empty(),
        }
    }

    pub fn require_uniform(&self, r: usize) -> Result<()> {
        if self.is_uniform_of(r) {
            Ok(())
        } else {
            Err(Error::NotUniform { expected: r })
        }
    }

    /// Vertex degrees counted with edge multiplicity.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = alloc::vec![0u64; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// `(sum of edge sizes) / n` as an exact rational; `0` when `n == 0`.
    pub fn average_degree(&self) -> Rational {
        if self.n == 0 {
            return Rational::from_integer(0);
        }
        let incidences: usize = self.edges.iter().map(Vec::len).sum();
        Rational::new(incidences as i64, self.n as i64)
    }
}

fn normalize_edge(n: usize, mut e: Vec<u32>) -> Result<Vec<u32>> {
    if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    e.sort_unstable();
    if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedVertex(w[0]));
    }
    if e.len() < 2 {
        return Err(Error::EdgeTooSmall(e.len()));
    }
    Ok(e)
}

/// All `C(n, r)` `r`-subsets of `0..n`, each once, in lexicographic order.
pub fn generate_complete(n: usize, r: usize) -> Result<Hypergraph> {
    check_params(n, r)?;
    let edges = Combinations::new(n, r)
        .map(|s| s.into_iter().map(|v| v as u32).collect())
        .collect();
    Ok(Hypergraph { n, rank: Some(r), edges })
}

/// All `r`-subsets whose label sum is congruent to `residue` mod `modulus`.
///
/// Vertex `i` carries the label `i + 1`, so the vertex set reads as
/// `{1, ..., n}` when checking residues.
pub fn generate_modular(n: usize, r: usize, modulus: u64, residue: u64) -> Result<Hypergraph> {
    check_params(n, r)?;
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be at least 1".into()));
    }
    let target = residue % modulus;
    let edges = Combinations::new(n, r)
        .filter(|s| s.iter().map(|&v| v as u64 + 1).sum::<u64>() % modulus == target)
        .map(|s| s.into_iter().map(|v| v as u32).collect())
        .collect();
    Ok(Hypergraph { n, rank: Some(r), edges })
}

fn check_params(n: usize, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::EdgeTooSmall(r));
    }
    if r > n {
        return Err(Error::InvalidArgument(alloc::format!(
            "uniformity {r} exceeds vertex count {n}"
        )));
    }
    if n > u32::MAX as usize || binomial(n as u64, r as u64) > (1 << 32) {
        return Err(Error::CapExceeded {
            size: binomial(n as u64, r as u64),
            cap: 1 << 32,
        });
    }
    Ok(())
}

/// A vertex coloring with colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<u32>,
    k: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::ColorOutOfRange { color: c, k });
        }
        Ok(Coloring { colors, k })
    }

    /// Every vertex gets color 0.
    pub fn constant(n: usize, k: u32) -> Self {
        Coloring {
            colors: alloc::vec![0; n],
            k: k.max(1),
        }
    }

    /// 2-coloring read from the low `n` bits of `mask`, vertex `i` at bit `i`.
    pub fn from_bits(mask: u64, n: usize) -> Self {
        Coloring {
            colors: (0..n).map(|i| ((mask >> i) & 1) as u32).collect(),
            k: 2,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Sizes of the color classes.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = alloc::vec![0; self.k as usize];
        for &c in &self.colors {
            sizes[c as usize] += 1;
        }
        sizes
    }

    pub(crate) fn require_len(&self, n: usize) -> Result<()> {
        if self.colors.len() != n {
            return Err(Error::ColoringLength {
                expected: n,
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Unordered split `{major, minor}` of a 2-colored edge, `major >= minor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitType {
    pub major: usize,
    pub minor: usize,
}

impl SplitType {
    pub fn new(a: usize, b: usize) -> Self {
        SplitType {
            major: a.max(b),
            minor: a.min(b),
        }
    }

    pub fn is_monochromatic(self) -> bool {
        self.minor == 0
    }
}

/// Split-type histogram of a 2-coloring over a uniform hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringStats {
    pub histogram: BTreeMap<SplitType, u64>,
    pub mono_hyperedges: u64,
    /// The split type whose proportion is reported in `p`: `{2,1}` for
    /// 3-uniform, `{3,1}` for 4-uniform and `{3,2}` for 5-uniform input.
    pub designated: Option<SplitType>,
    pub p: Option<Rational>,
}

/// Tallies how each hyperedge is split by a 2-coloring.
pub fn split_histogram(h: &Hypergraph, c: &Coloring) -> Result<ColoringStats> {
    if c.k() != 2 {
        return Err(Error::WrongColorCount {
            expected: 2,
            got: c.k(),
        });
    }
    c.require_len(h.vertex_count())?;
    let r = match (h.uniformity(), h.edge_count()) {
        (Some(r), _) => r,
        (None, 0) => 0,
        (None, _) => return Err(Error::NonUniform),
    };
    let mut histogram = BTreeMap::new();
    for e in h.edges() {
        let ones = e.iter().filter(|&&v| c.color(v as usize) == 1).count();
        *histogram.entry(SplitType::new(ones, r - ones)).or_insert(0u64) += 1;
    }
    let mono_hyperedges = histogram.get(&SplitType::new(r, 0)).copied().unwrap_or(0);
    let designated = match r {
        3 => Some(SplitType::new(2, 1)),
        4 => Some(SplitType::new(3, 1)),
        5 => Some(SplitType::new(3, 2)),
        _ => None,
    };
    let p = designated.map(|t| {
        let count = histogram.get(&t).copied().unwrap_or(0) as i64;
        if h.edge_count() == 0 {
            Rational::from_integer(0)
        } else {
            Rational::new(count, h.edge_count() as i64)
        }
    });
    Ok(ColoringStats {
        histogram,
        mono_hyperedges,
        designated,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k43() -> Hypergraph {
        Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn edges_are_sorted_and_validated() {
        let h = Hypergraph::new(5, vec![vec![4, 0, 2]]).unwrap();
        assert_eq!(h.edges()[0], vec![0, 2, 4]);
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 0, 1]]),
            Err(Error::RepeatedVertex(0))
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Hypergraph::new(3, vec![vec![1]]), Err(Error::EdgeTooSmall(1)));
        let mixed = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        assert_eq!(mixed.uniformity(), None);
        assert!(mixed.require_uniform(2).is_err());
    }

    #[test]
    fn empty_edge_set() {
        let h = Hypergraph::uniform(4, 3, vec![]).unwrap();
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(h.average_degree(), Rational::from_integer(0));
    }

    #[test]
    fn complete_generators() {
        assert_eq!(generate_complete(4, 3).unwrap(), k43());
        let k53 = generate_complete(5, 3).unwrap();
        assert_eq!(k53.edge_count(), 10);
        assert!(k53.degrees().iter().all(|&d| d == 6));
        assert_eq!(k53.average_degree(), Rational::from_integer(6));
        assert_eq!(generate_complete(18, 4).unwrap().edge_count(), 3060);
        assert!(generate_complete(3, 4).is_err());
        assert!(generate_complete(3, 1).is_err());
    }

    #[test]
    fn modular_generator() {
        let h = generate_modular(18, 4, 3, 0).unwrap();
        assert_eq!(h.edge_count(), 1020);
        assert_eq!(h.average_degree(), Rational::new(680, 3));
        assert_eq!(generate_modular(4, 3, 1, 0).unwrap().edge_count(), 4);
        assert!(generate_modular(4, 3, 0, 0).is_err());
        // brute-force count over all 20 triples of {1..6}
        let mut count = 0;
        for a in 1..=6 {
            for b in a + 1..=6 {
                for c in b + 1..=6 {
                    if (a + b + c) % 2 == 0 {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(generate_modular(6, 3, 2, 0).unwrap().edge_count(), count);
    }

    #[test]
    fn split_types() {
        let c = Coloring::new(vec![0, 0, 1, 1], 2).unwrap();
        let stats = split_histogram(&k43(), &c).unwrap();
        assert_eq!(stats.histogram.len(), 1);
        assert_eq!(stats.histogram[&SplitType::new(2, 1)], 4);
        assert_eq!(stats.mono_hyperedges, 0);
        assert_eq!(stats.p, Some(Rational::from_integer(1)));

        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let c = Coloring::new(vec![0, 0, 0, 1], 2).unwrap();
        let stats = split_histogram(&h, &c).unwrap();
        assert_eq!(stats.histogram[&SplitType::new(3, 1)], 1);
        assert_eq!(stats.p, Some(Rational::from_integer(1)));

        let mixed = Hypergraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).unwrap();
        assert_eq!(
            split_histogram(&mixed, &c).unwrap_err(),
            Error::NonUniform
        );
        let three = Coloring::new(vec![0, 1, 2, 0], 3).unwrap();
        assert!(split_histogram(&h, &three).is_err());
    }

    #[test]
    fn coloring_validation() {
        assert!(Coloring::new(vec![0, 2], 2).is_err());
        let c = Coloring::from_bits(0b101, 3);
        assert_eq!(c.colors(), &[1, 0, 1]);
        assert_eq!(c.class_sizes(), vec![1, 2]);
    }
}
