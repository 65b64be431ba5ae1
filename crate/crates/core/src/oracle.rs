//! Exhaustive ground truth for small instances.
//!
//! Searches fix the first vertex's color (and, for `k` colors, only try
//! colorings in restricted-growth form) since every queried property is
//! invariant under permuting colors. Witnesses are the lexicographically
//! smallest colorings with the property.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Coloring, Error, Hypergraph, Multigraph, Rational, Result};

/// Search limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest vertex count accepted by the colorability searches.
    pub max_vertices: usize,
    /// Largest `k^n` accepted by [`min_mono_edges`].
    pub search_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 24,
            search_budget: 1 << 26,
        }
    }
}

/// Answer of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult<T> {
    pub answer: T,
    pub witness: Option<Coloring>,
    /// `true` for a complete search, `false` for sampling.
    pub exhaustive: bool,
    /// Colorings (or search nodes) examined.
    pub work: u64,
}

fn check_cap(n: usize, limits: &OracleLimits) -> Result<()> {
    let cap = limits.max_vertices.min(63);
    if n > cap {
        return Err(Error::CapExceeded {
            size: n as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

/// Whether no hyperedge of `h` is monochromatic under `c`.
pub fn is_weak_coloring(h: &Hypergraph, c: &Coloring) -> bool {
    c.len() == h.vertex_count()
        && h.edges().iter().all(|e| {
            let first = c.color(e[0] as usize);
            e.iter().any(|&v| c.color(v as usize) != first)
        })
}

/// Whether every edge of `g` joins two colors.
pub fn is_proper_coloring(g: &Multigraph, c: &Coloring) -> bool {
    c.len() == g.vertex_count() && g.edges().all(|(u, v, _)| c.color(u) != c.color(v))
}

/// Monochromatic and bichromatic edge counts of `c`, with multiplicity.
pub fn mono_bichromatic_counts(g: &Multigraph, c: &Coloring) -> (u64, u64) {
    g.edges().fold((0, 0), |(m, b), (u, v, w)| {
        if c.color(u) == c.color(v) {
            (m + w as u64, b)
        } else {
            (m, b + w as u64)
        }
    })
}

/// Decides weak 2-colorability by trying all `2^(n-1)` colorings with
/// vertex 0 colored 0.
pub fn is_weak_2_colorable(h: &Hypergraph, limits: &OracleLimits) -> Result<OracleResult<bool>> {
    let n = h.vertex_count();
    check_cap(n, limits)?;
    if n == 0 {
        return Ok(OracleResult {
            answer: true,
            witness: Some(Coloring::constant(0, 2)),
            exhaustive: true,
            work: 1,
        });
    }
    // vertex i lives at bit n-1-i so increasing masks are lexicographic
    let bit = |v: u32| 1u64 << (n - 1 - v as usize);
    let masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0, |m, &v| m | bit(v)))
        .collect();
    let total = 1u64 << (n - 1);
    let mut work = 0;
    for mask in 0..total {
        work += 1;
        if masks.iter().all(|&e| {
            let ones = mask & e;
            ones != 0 && ones != e
        }) {
            let colors = (0..n).map(|v| ((mask >> (n - 1 - v)) & 1) as u32).collect();
            return Ok(OracleResult {
                answer: true,
                witness: Some(Coloring::new(colors, 2)?),
                exhaustive: true,
                work,
            });
        }
    }
    Ok(OracleResult {
        answer: false,
        witness: None,
        exhaustive: true,
        work,
    })
}

struct Search<'a> {
    g: &'a Multigraph,
    k: u32,
    colors: Vec<u32>,
    work: u64,
}

impl Search<'_> {
    /// Cost of giving `v` color `c` against the already colored prefix.
    fn conflict(&self, v: usize, c: u32) -> u64 {
        let row = self.g.row(v);
        (0..v)
            .filter(|&u| self.colors[u] == c)
            .map(|u| row[u] as u64)
            .sum()
    }

    fn proper(&mut self, v: usize, used: u32) -> bool {
        self.work += 1;
        if v == self.colors.len() {
            return true;
        }
        for c in 0..(used + 1).min(self.k) {
            if self.conflict(v, c) == 0 {
                self.colors[v] = c;
                if self.proper(v + 1, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }

    fn min_mono(&mut self, v: usize, used: u32, cost: u64, best: &mut (u64, Vec<u32>)) {
        self.work += 1;
        if cost >= best.0 {
            return;
        }
        if v == self.colors.len() {
            *best = (cost, self.colors.clone());
            return;
        }
        for c in 0..(used + 1).min(self.k) {
            let extra = self.conflict(v, c);
            self.colors[v] = c;
            self.min_mono(v + 1, used.max(c + 1), cost + extra, best);
        }
    }
}

/// Decides proper `k`-colorability of `g` by backtracking.
pub fn is_k_colorable(g: &Multigraph, k: u32, limits: &OracleLimits) -> Result<OracleResult<bool>> {
    let n = g.vertex_count();
    check_cap(n, limits)?;
    if k == 0 {
        return Ok(OracleResult {
            answer: n == 0,
            witness: None,
            exhaustive: true,
            work: 0,
        });
    }
    let mut s = Search {
        g,
        k,
        colors: alloc::vec![0; n],
        work: 0,
    };
    let answer = s.proper(0, 0);
    let witness = if answer {
        Some(Coloring::new(s.colors, k)?)
    } else {
        None
    };
    Ok(OracleResult {
        answer,
        witness,
        exhaustive: true,
        work: s.work,
    })
}

/// The chromatic number of `g`, with an optimal coloring as witness.
pub fn chromatic_number(g: &Multigraph, limits: &OracleLimits) -> Result<OracleResult<u32>> {
    let mut work = 0;
    for k in 1..=g.vertex_count().max(1) as u32 {
        let r = is_k_colorable(g, k, limits)?;
        work += r.work;
        if r.answer {
            return Ok(OracleResult {
                answer: if g.vertex_count() == 0 { 0 } else { k },
                witness: r.witness,
                exhaustive: true,
                work,
            });
        }
    }
    unreachable!("n colors always suffice")
}

/// Exact minimum number of monochromatic edges (with multiplicity) over
/// all `k`-colorings of `g`.
pub fn min_mono_edges(g: &Multigraph, k: u32, limits: &OracleLimits) -> Result<OracleResult<u64>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = g.vertex_count();
    let space = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(k as u64));
    match space {
        Some(s) if s <= limits.search_budget => {}
        _ => {
            return Err(Error::CapExceeded {
                size: space.unwrap_or(u64::MAX),
                cap: limits.search_budget,
            })
        }
    }
    let mut s = Search {
        g,
        k,
        colors: alloc::vec![0; n],
        work: 0,
    };
    let mut best = (u64::MAX, Vec::new());
    s.min_mono(0, 0, 0, &mut best);
    Ok(OracleResult {
        answer: best.0,
        witness: Some(Coloring::new(best.1, k)?),
        exhaustive: true,
        work: s.work,
    })
}

/// An expectation computed exactly where the arithmetic allows it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expectation {
    Exact(Rational),
    Approx(f64),
}

impl Expectation {
    pub fn to_f64(self) -> f64 {
        match self {
            Expectation::Exact(r) => crate::to_f64(r),
            Expectation::Approx(x) => x,
        }
    }
}

/// `cos(2 pi j / k)` for the `k` whose roots of unity have rational real parts.
fn rational_cosines(k: u32) -> Option<Vec<Rational>> {
    let r = |a: i64, b: i64| Rational::new(a, b);
    Some(match k {
        1 => alloc::vec![r(1, 1)],
        2 => alloc::vec![r(1, 1), r(-1, 1)],
        3 => alloc::vec![r(1, 1), r(-1, 2), r(-1, 2)],
        4 => alloc::vec![r(1, 1), r(0, 1), r(-1, 1), r(0, 1)],
        6 => alloc::vec![r(1, 1), r(1, 2), r(-1, 2), r(-1, 1), r(-1, 2), r(1, 2)],
        _ => return None,
    })
}

fn float_cosines(k: u32) -> Vec<f64> {
    (0..k)
        .map(|j| libm::cos(2.0 * core::f64::consts::PI * j as f64 / k as f64))
        .collect()
}

/// Edge multiplicity between each ordered pair of color classes.
fn color_pair_weights(g: &Multigraph, c: &Coloring) -> Vec<u64> {
    let k = c.k() as usize;
    let mut w = alloc::vec![0u64; k * k];
    for (u, v, m) in g.edges() {
        let (a, b) = (c.color(u) as usize, c.color(v) as usize);
        w[a * k + b] += m as u64;
    }
    w
}

/// Visits every permutation of `0..k` (Heap's algorithm).
fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut stack = alloc::vec![0usize; k];
    f(&perm);
    let mut i = 1;
    while i < k {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            f(&perm);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
}

/// Average of `x* A x` over all `k!` bijections `rho` from colors to the
/// `k`-th roots of unity, where `x_j = rho(c(j))`.
///
/// Exact for `k` in `{1, 2, 3, 4, 6}`; a float average otherwise.
pub fn exact_rho_expectation(g: &Multigraph, c: &Coloring) -> Result<Expectation> {
    c.require_len(g.vertex_count())?;
    let k = c.k();
    if k > 8 {
        return Err(Error::CapExceeded {
            size: k as u64,
            cap: 8,
        });
    }
    let ku = k as usize;
    let weights = color_pair_weights(g, c);
    let diff = |perm: &[usize], a: usize, b: usize| (perm[a] + ku - perm[b]) % ku;
    let perms: i64 = (1..=k as i64).product();
    if let Some(cos) = rational_cosines(k) {
        let mut total = Rational::from_integer(0);
        for_each_permutation(ku, |perm| {
            for a in 0..ku {
                for b in 0..ku {
                    let w = weights[a * ku + b];
                    if w != 0 {
                        // each edge contributes x_u conj(x_v) + x_v conj(x_u)
                        total += cos[diff(perm, a, b)] * Rational::from_integer(2 * w as i64);
                    }
                }
            }
        });
        Ok(Expectation::Exact(total / Rational::from_integer(perms)))
    } else {
        let cos = float_cosines(k);
        let mut total = 0.0;
        for_each_permutation(ku, |perm| {
            for a in 0..ku {
                for b in 0..ku {
                    total += 2.0 * weights[a * ku + b] as f64 * cos[diff(perm, a, b)];
                }
            }
        });
        Ok(Expectation::Approx(total / perms as f64))
    }
}

/// Sample mean of `x* A x` over uniformly random bijections `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Estimates [`exact_rho_expectation`] by sampling `trials` bijections
/// from a ChaCha8 stream seeded with `seed`.
pub fn monte_carlo_rho(g: &Multigraph, c: &Coloring, trials: u64, seed: u64) -> Result<MonteCarloEstimate> {
    c.require_len(g.vertex_count())?;
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let ku = c.k() as usize;
    let weights = color_pair_weights(g, c);
    let cos = float_cosines(c.k());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..ku).collect();
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for _ in 0..trials {
        perm.shuffle(&mut rng);
        let mut value = 0.0;
        for a in 0..ku {
            for b in 0..ku {
                value += 2.0 * weights[a * ku + b] as f64 * cos[(perm[a] + ku - perm[b]) % ku];
            }
        }
        sum += value;
        sum_sq += value * value;
    }
    let t = trials as f64;
    let mean = sum / t;
    let std_error = if trials > 1 {
        let var = ((sum_sq - t * mean * mean) / (t - 1.0)).max(0.0);
        libm::sqrt(var / t)
    } else {
        0.0
    };
    Ok(MonteCarloEstimate {
        mean,
        std_error,
        trials,
        seed,
    })
}
