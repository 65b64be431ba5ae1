//! Spectral bounds on chromatic numbers and 2-colorability certificates.
//!
//! Every certificate keeps each quantity that entered its final
//! inequality, so [`Certificate::recheck`] (or an external checker with
//! interval arithmetic) can re-derive the verdict without redoing any
//! eigenvalue computation.

use alloc::vec::Vec;
use core::fmt;

use crate::project::{sset_graph, underlying_graph, DEFAULT_VERTEX_CAP};
use crate::spectra::{extremal_eigenvalues, graph_spectrum, EigenOptions, SymMatrix};
use crate::{to_f64, Error, Hypergraph, Multigraph, Rational, Result};

/// Default absolute slack a violated inequality must exceed.
pub const DEFAULT_MARGIN_TOL: f64 = 1e-6;

/// Which inequality a certificate applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    HoffmanLovasz,
    ConflictLemma,
    ThreeUniform,
    FourUniform,
    FiveUniform,
    Wilf,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::HoffmanLovasz => "HL",
            Theorem::ConflictLemma => "LEMMA1",
            Theorem::ThreeUniform => "T3U",
            Theorem::FourUniform => "T4U",
            Theorem::FiveUniform => "T5U",
            Theorem::Wilf => "WILF",
        }
    }

    /// The hypergraph certificate for `r`-uniform input, if any.
    pub fn for_uniformity(r: usize) -> Option<Theorem> {
        match r {
            3 => Some(Theorem::ThreeUniform),
            4 => Some(Theorem::FourUniform),
            5 => Some(Theorem::FiveUniform),
            _ => None,
        }
    }

    pub fn uniformity(self) -> Option<usize> {
        match self {
            Theorem::ThreeUniform => Some(3),
            Theorem::FourUniform => Some(4),
            Theorem::FiveUniform => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The hypergraph is provably not weakly 2-colorable.
    Excluded,
    /// The inequality holds; nothing follows.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Excluded => "EXCLUDED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of applying one hypergraph inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub theorem: Theorem,
    pub verdict: Verdict,
    /// `|margin| <= margin_tolerance`: the inequality holds with equality.
    pub tight: bool,
    pub n: usize,
    pub r: usize,
    pub edges: usize,
    pub average_degree: Rational,
    /// Smallest eigenvalue of the underlying graph.
    pub lambda_min: f64,
    /// Smallest eigenvalue of the 2-subset graph (4 and 5-uniform only).
    pub lambda2_min: Option<f64>,
    pub bound: f64,
    /// `bound - average_degree`; negative beyond tolerance means excluded.
    pub margin: f64,
    pub eigen_tolerance: f64,
    pub margin_tolerance: f64,
}

impl Certificate {
    /// Named numeric quantities, in a fixed order.
    pub fn quantities(&self) -> Vec<(&'static str, f64)> {
        let mut q = alloc::vec![
            ("avg_degree", to_f64(self.average_degree)),
            ("lambda_min", self.lambda_min),
        ];
        if let Some(l2) = self.lambda2_min {
            q.push(("lambda2_min", l2));
        }
        q.extend([
            ("bound", self.bound),
            ("margin", self.margin),
            ("n", self.n as f64),
            ("r", self.r as f64),
        ]);
        q
    }

    /// Recomputes bound, margin and verdict from the stored eigenvalues.
    pub fn recheck(&self) -> Verdict {
        if self.edges == 0 {
            return Verdict::Inconclusive;
        }
        let bound = match self.theorem {
            Theorem::ThreeUniform => bound_3u(self.lambda_min),
            Theorem::FourUniform => bound_4u(self.lambda_min, self.lambda2_min.unwrap_or(0.0), self.n),
            Theorem::FiveUniform => bound_5u(self.lambda_min, self.lambda2_min.unwrap_or(0.0), self.n),
            _ => return self.verdict,
        };
        verdict_for(to_f64(self.average_degree), bound, self.margin_tolerance)
    }
}

/// Options shared by the certifiers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyOptions {
    pub eigen: EigenOptions,
    pub margin_tol: f64,
    /// Largest 2-subset graph that will be built.
    pub vertex_cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            eigen: EigenOptions::default(),
            margin_tol: DEFAULT_MARGIN_TOL,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

fn verdict_for(avg_degree: f64, bound: f64, margin_tol: f64) -> Verdict {
    if avg_degree > bound + margin_tol {
        Verdict::Excluded
    } else {
        Verdict::Inconclusive
    }
}

/// `-3/2 lambda_min`: the largest average degree a weakly 2-colorable
/// 3-uniform hypergraph can have.
pub fn bound_3u(lambda_min: f64) -> f64 {
    -1.5 * lambda_min
}

/// `-2 lambda_min - (n-1)/3 lambda2_min` for 4-uniform hypergraphs.
pub fn bound_4u(lambda_min: f64, lambda2_min: f64, n: usize) -> f64 {
    -2.0 * lambda_min - (n as f64 - 1.0) / 3.0 * lambda2_min
}

/// `-5/2 lambda_min - 5(n-1)/12 lambda2_min` for 5-uniform hypergraphs.
pub fn bound_5u(lambda_min: f64, lambda2_min: f64, n: usize) -> f64 {
    -2.5 * lambda_min - 5.0 * (n as f64 - 1.0) / 12.0 * lambda2_min
}

/// Range that the `{3,1}`-split fraction `p` of any weak 2-coloring of a
/// 4-uniform hypergraph must lie in, as `(lower, upper)`.
///
/// The lower end comes from the underlying graph (monochromatic fraction
/// `1/3 + p/6`), the upper end from the 2-subset graph (`1 - p`). The range
/// is empty exactly when `avg_degree > bound_4u(..)`.
pub fn p_window_4u(avg_degree: f64, lambda_min: f64, lambda2_min: f64, n: usize) -> (f64, f64) {
    let lower = 1.0 + lambda_min / avg_degree;
    let upper = 0.5 - (n as f64 - 1.0) * lambda2_min / (6.0 * avg_degree);
    (lower, upper)
}

/// As [`p_window_4u`] for the `{3,2}`-split fraction of a 5-uniform
/// hypergraph (monochromatic fractions `3/5 - p/5` and `1/5 + 2p/5`).
pub fn p_window_5u(avg_degree: f64, lambda_min: f64, lambda2_min: f64, n: usize) -> (f64, f64) {
    let lower = 0.75 + 5.0 * (n as f64 - 1.0) * lambda2_min / (48.0 * avg_degree);
    let upper = 0.5 - 5.0 * lambda_min / (8.0 * avg_degree);
    (lower, upper)
}

/// `1 - lambda_max(W) / lambda_min(W)`, a lower bound on the chromatic
/// number of any graph whose edge pattern supports `W`.
pub fn hoffman_lovasz_bound(w: &SymMatrix, opts: &EigenOptions) -> Result<f64> {
    if let Some(i) = (0..w.dim()).find(|&i| w.get(i, i) != 0.0) {
        return Err(Error::NonZeroDiagonal(i));
    }
    if w.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let s = extremal_eigenvalues(w, opts)?;
    Ok(1.0 - s.lambda_max / s.lambda_min)
}

/// `1 + lambda_max(A)`, an upper bound on the chromatic number.
pub fn wilf_bound(g: &Multigraph, opts: &EigenOptions) -> Result<f64> {
    Ok(1.0 + graph_spectrum(g, opts)?.lambda_max)
}

/// `(d + (k-1) lambda_min) / (d k)` from an average degree and smallest
/// eigenvalue.
pub fn mono_fraction_floor(avg_degree: f64, lambda_min: f64, k: u32) -> f64 {
    let k = k as f64;
    (avg_degree + (k - 1.0) * lambda_min) / (avg_degree * k)
}

/// `(1 - lambda_min/d) / (p - lambda_min/d)` from an average degree and
/// smallest eigenvalue.
pub fn chromatic_floor(avg_degree: f64, lambda_min: f64, p: f64) -> f64 {
    let ratio = lambda_min / avg_degree;
    (1.0 - ratio) / (p - ratio)
}

fn edged_spectrum(g: &Multigraph, opts: &EigenOptions) -> Result<(f64, f64)> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    let s = graph_spectrum(g, opts)?;
    Ok((to_f64(g.average_degree()), s.lambda_min))
}

/// Lower bound on the fraction of monochromatic edges (with multiplicity)
/// under any `k`-coloring of `g`. Negative values are vacuous.
pub fn min_mono_fraction_bound(g: &Multigraph, k: u32, opts: &EigenOptions) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidArgument("k must be at least 2".into()));
    }
    let (d, lambda) = edged_spectrum(g, opts)?;
    Ok(mono_fraction_floor(d, lambda, k))
}

/// Lower bound on the number of colors of any coloring of `g` that leaves
/// at most a fraction `p` of edges monochromatic.
pub fn lemma_chromatic_bound(g: &Multigraph, p: f64, opts: &EigenOptions) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(alloc::format!(
            "fraction {p} outside [0, 1]"
        )));
    }
    let (d, lambda) = edged_spectrum(g, opts)?;
    Ok(chromatic_floor(d, lambda, p))
}

fn empty_certificate(theorem: Theorem, h: &Hypergraph, r: usize, opts: &CertifyOptions) -> Certificate {
    Certificate {
        theorem,
        verdict: Verdict::Inconclusive,
        tight: false,
        n: h.vertex_count(),
        r,
        edges: 0,
        average_degree: Rational::from_integer(0),
        lambda_min: 0.0,
        lambda2_min: if r > 3 { Some(0.0) } else { None },
        bound: 0.0,
        margin: 0.0,
        eigen_tolerance: opts.eigen.tol,
        margin_tolerance: opts.margin_tol,
    }
}

fn finish(
    theorem: Theorem,
    h: &Hypergraph,
    r: usize,
    (lambda_min, lambda2_min, eigen_tolerance): (f64, Option<f64>, f64),
    bound: f64,
    opts: &CertifyOptions,
) -> Certificate {
    let avg = h.average_degree();
    let margin = bound - to_f64(avg);
    Certificate {
        theorem,
        verdict: verdict_for(to_f64(avg), bound, opts.margin_tol),
        tight: libm::fabs(margin) <= opts.margin_tol,
        n: h.vertex_count(),
        r,
        edges: h.edge_count(),
        average_degree: avg,
        lambda_min,
        lambda2_min,
        bound,
        margin,
        eigen_tolerance,
        margin_tolerance: opts.margin_tol,
    }
}

/// Checks `avg_degree <= -3/2 lambda_min(G(H))` for a 3-uniform hypergraph.
pub fn certify_3u(h: &Hypergraph, opts: &CertifyOptions) -> Result<Certificate> {
    h.require_uniform(3)?;
    if h.edge_count() == 0 {
        return Ok(empty_certificate(Theorem::ThreeUniform, h, 3, opts));
    }
    let s = graph_spectrum(&underlying_graph(h), &opts.eigen)?;
    let bound = bound_3u(s.lambda_min);
    Ok(finish(Theorem::ThreeUniform, h, 3, (s.lambda_min, None, s.tolerance), bound, opts))
}

fn two_graph_spectra(h: &Hypergraph, opts: &CertifyOptions) -> Result<(f64, f64, f64)> {
    let pair = sset_graph(h, 2, opts.vertex_cap)?;
    let under = graph_spectrum(&underlying_graph(h), &opts.eigen)?;
    let pair = graph_spectrum(&pair, &opts.eigen)?;
    Ok((
        under.lambda_min,
        pair.lambda_min,
        under.tolerance.max(pair.tolerance),
    ))
}

/// Checks `avg_degree <= -2 lambda_min - (n-1)/3 lambda2_min` for a
/// 4-uniform hypergraph.
pub fn certify_4u(h: &Hypergraph, opts: &CertifyOptions) -> Result<Certificate> {
    h.require_uniform(4)?;
    if h.vertex_count() < 4 || h.edge_count() == 0 {
        return Ok(empty_certificate(Theorem::FourUniform, h, 4, opts));
    }
    let (l1, l2, tol) = two_graph_spectra(h, opts)?;
    let bound = bound_4u(l1, l2, h.vertex_count());
    Ok(finish(Theorem::FourUniform, h, 4, (l1, Some(l2), tol), bound, opts))
}

/// Checks `avg_degree <= -5/2 lambda_min - 5(n-1)/12 lambda2_min` for a
/// 5-uniform hypergraph.
pub fn certify_5u(h: &Hypergraph, opts: &CertifyOptions) -> Result<Certificate> {
    h.require_uniform(5)?;
    if h.vertex_count() < 5 || h.edge_count() == 0 {
        return Ok(empty_certificate(Theorem::FiveUniform, h, 5, opts));
    }
    let (l1, l2, tol) = two_graph_spectra(h, opts)?;
    let bound = bound_5u(l1, l2, h.vertex_count());
    Ok(finish(Theorem::FiveUniform, h, 5, (l1, Some(l2), tol), bound, opts))
}

/// Applies the certificate matching `theorem`, or the hypergraph's own
/// uniformity when `theorem` is `None`.
pub fn certify(h: &Hypergraph, theorem: Option<Theorem>, opts: &CertifyOptions) -> Result<Certificate> {
    let theorem = match theorem {
        Some(t) => t,
        None => {
            let r = h.uniformity().ok_or(Error::NonUniform)?;
            Theorem::for_uniformity(r).ok_or_else(|| {
                Error::InvalidArgument(alloc::format!("no certificate for {r}-uniform hypergraphs"))
            })?
        }
    };
    match theorem {
        Theorem::ThreeUniform => certify_3u(h, opts),
        Theorem::FourUniform => certify_4u(h, opts),
        Theorem::FiveUniform => certify_5u(h, opts),
        other => Err(Error::InvalidArgument(alloc::format!(
            "{other} is not a hypergraph certificate"
        ))),
    }
}
