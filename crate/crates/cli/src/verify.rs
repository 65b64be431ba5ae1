//! Randomized verification suites that compare the spectral bounds against
//! exhaustive ground truth.

use std::ops::RangeInclusive;

use hypercert::bounds::{certify, min_mono_fraction_bound};
use hypercert::corpus::{random_coloring, random_multigraph, random_uniform_hypergraph};
use hypercert::oracle::{exact_rho_expectation, is_weak_2_colorable, min_mono_edges, mono_bichromatic_counts, Expectation, OracleLimits};
use hypercert::spectra::graph_spectrum;
use hypercert::{to_f64, CertifyOptions, EigenOptions, Rational, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::format::write_hypergraph;
use crate::report::coloring;

/// Slack allowed when comparing a float bound to an exact count.
pub const COMPARE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemma,
    Expectation,
    Soundness,
    All,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub sizes: Option<RangeInclusive<usize>>,
    pub eigen: EigenOptions,
    pub limits: OracleLimits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            count: 0,
            sizes: None,
            eigen: EigenOptions::default(),
            limits: OracleLimits::default(),
        }
    }
}

/// Outcome of one property over a corpus.
#[derive(Debug, Clone, Default)]
pub struct PropertyOutcome {
    pub name: String,
    pub checks: u64,
    pub failures: Vec<Value>,
}

impl PropertyOutcome {
    fn new(name: &str) -> Self {
        PropertyOutcome {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.failures.push(counterexample());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "property": self.name,
            "checks": self.checks,
            "passed": self.passed(),
            "counterexamples": self.failures,
        })
    }
}

/// Parses `a..b` (inclusive) or a single size.
pub fn parse_sizes(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad size {s:?}"));
    let range = match text.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.trim_start_matches('='))?,
        None => {
            let n = parse(text)?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(format!("empty size range {text:?}"));
    }
    Ok(range)
}

fn clamp(range: &Option<RangeInclusive<usize>>, default: RangeInclusive<usize>, lo: usize, hi: usize) -> RangeInclusive<usize> {
    let r = range.clone().unwrap_or(default);
    (*r.start()).max(lo)..=(*r.end()).min(hi).max((*r.start()).max(lo))
}

fn closed_form(m: u64, b: u64, k: u32) -> Rational {
    let mono = Rational::from_integer(2 * m as i64);
    if k <= 1 {
        mono
    } else {
        mono - Rational::new(2 * b as i64, k as i64 - 1)
    }
}

/// Full-permutation average of `x* A x` equals `2M - 2B/(k-1)`.
pub fn expectation_suite(cfg: &SuiteConfig) -> Vec<PropertyOutcome> {
    let count = if cfg.count == 0 { 50 } else { cfg.count };
    let sizes = clamp(&cfg.sizes, 1..=8, 1, 10);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut exact = PropertyOutcome::new("rho expectation equals 2M - 2B/(k-1)");
    for _ in 0..count {
        let n = rng.gen_range(sizes.clone());
        let density = rng.gen_range(0.2..1.0);
        let g = random_multigraph(&mut rng, n, density, 3);
        for k in [2, 3, 4] {
            let c = random_coloring(&mut rng, n, k);
            let (m, b) = mono_bichromatic_counts(&g, &c);
            let want = closed_form(m, b, k);
            let got = exact_rho_expectation(&g, &c);
            let ok = match got {
                Ok(Expectation::Exact(e)) => e == want,
                Ok(Expectation::Approx(x)) => (x - to_f64(want)).abs() <= 1e-12 * to_f64(want).abs().max(1.0),
                Err(_) => false,
            };
            exact.check(ok, || {
                json!({
                    "n": n, "k": k, "edges": g.edges().collect::<Vec<_>>(),
                    "coloring": coloring(&c), "expected": want.to_string(),
                    "got": format!("{got:?}"),
                })
            });
        }
    }
    vec![exact]
}

/// Exhaustive minimum monochromatic fraction against the spectral lower
/// bound, and the Rayleigh sandwich on the permutation average.
pub fn lemma_suite(cfg: &SuiteConfig) -> Vec<PropertyOutcome> {
    let count = if cfg.count == 0 { 50 } else { cfg.count };
    let sizes = clamp(&cfg.sizes, 2..=10, 2, 14);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut floor = PropertyOutcome::new("min mono fraction >= spectral floor");
    let mut sandwich = PropertyOutcome::new("n lambda_min <= E[x* A x] <= n lambda_max");
    let mut done = 0;
    while done < count {
        let n = rng.gen_range(sizes.clone());
        let density = rng.gen_range(0.2..1.0);
        let g = random_multigraph(&mut rng, n, density, 3);
        if g.is_edgeless() {
            continue;
        }
        done += 1;
        let edges = g.total_multiplicity() as f64;
        for k in [2, 3] {
            let bound = min_mono_fraction_bound(&g, k, &cfg.eigen);
            let exact = min_mono_edges(&g, k, &cfg.limits);
            let (bound, exact) = match (bound, exact) {
                (Ok(b), Ok(e)) => (b, e),
                (b, e) => {
                    floor.check(false, || json!({ "n": n, "k": k, "error": format!("{b:?} / {e:?}") }));
                    continue;
                }
            };
            let frac = exact.answer as f64 / edges;
            floor.check(frac >= bound - COMPARE_TOL, || {
                json!({
                    "n": n, "k": k, "edges": g.edges().collect::<Vec<_>>(),
                    "minMonoFraction": frac, "bound": bound,
                })
            });
        }
        let s = match graph_spectrum(&g, &cfg.eigen) {
            Ok(s) => s,
            Err(e) => {
                sandwich.check(false, || json!({ "n": n, "error": e.to_string() }));
                continue;
            }
        };
        for _ in 0..10 {
            let k = rng.gen_range(2..=3);
            let c = random_coloring(&mut rng, n, k);
            let e = exact_rho_expectation(&g, &c).map(Expectation::to_f64).unwrap_or(f64::NAN);
            let nf = n as f64;
            let ok = s.lambda_min * nf <= e + COMPARE_TOL && e <= s.lambda_max * nf + COMPARE_TOL;
            sandwich.check(ok, || {
                json!({
                    "n": n, "edges": g.edges().collect::<Vec<_>>(), "coloring": coloring(&c),
                    "expectation": e, "lambdaMin": s.lambda_min, "lambdaMax": s.lambda_max,
                })
            });
        }
    }
    vec![floor, sandwich]
}

/// No EXCLUDED certificate on a hypergraph the exhaustive search can
/// 2-color.
pub fn soundness_suite(cfg: &SuiteConfig) -> Vec<PropertyOutcome> {
    let count = if cfg.count == 0 { 200 } else { cfg.count };
    let sizes = clamp(&cfg.sizes, 4..=12, 4, cfg.limits.max_vertices.min(16));
    let opts = CertifyOptions {
        eigen: cfg.eigen,
        ..CertifyOptions::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sound = PropertyOutcome::new("EXCLUDED implies not weakly 2-colorable");
    let mut excluded = 0u64;
    for i in 0..count {
        let r = 3 + i % 3;
        let lo = (*sizes.start()).max(r + 1);
        let n = rng.gen_range(lo..=(*sizes.end()).max(lo));
        let density = rng.gen_range(0.3..1.0);
        let h = random_uniform_hypergraph(&mut rng, n, r, density, 0.1);
        let cert = certify(&h, None, &opts);
        let truth = is_weak_2_colorable(&h, &cfg.limits);
        let ok = match (&cert, &truth) {
            (Ok(c), Ok(t)) => {
                if c.verdict == Verdict::Excluded {
                    excluded += 1;
                }
                !(c.verdict == Verdict::Excluded && t.answer)
            }
            _ => false,
        };
        sound.check(ok, || {
            json!({
                "hypergraph": write_hypergraph(&h),
                "certificate": format!("{cert:?}"),
                "oracle": format!("{truth:?}"),
            })
        });
    }
    sound.name = format!("{} ({excluded} exclusions checked)", sound.name);
    vec![sound]
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Vec<(&'static str, Vec<PropertyOutcome>)> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Expectation | Suite::All) {
        out.push(("expectation", expectation_suite(cfg)));
    }
    if matches!(suite, Suite::Lemma | Suite::All) {
        out.push(("lemma", lemma_suite(cfg)));
    }
    if matches!(suite, Suite::Soundness | Suite::All) {
        out.push(("soundness", soundness_suite(cfg)));
    }
    out
}
