//! Command-line front end.
//!
//! JSON reports go to stdout (or `--json-out`), diagnostics to stderr.
//! Exit codes: 0 success or INCONCLUSIVE, 10 EXCLUDED, 1 failed
//! verification, 2 usage or input error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use hypercert::bounds::certify;
use hypercert::hypergraph::{generate_complete, generate_modular};
use hypercert::oracle::{chromatic_number, is_weak_2_colorable, min_mono_edges, OracleLimits};
use hypercert::project::{sset_graph, underlying_graph};
use hypercert::spectra::graph_spectrum;
use hypercert::{CertifyOptions, EigenOptions, Hypergraph, Multigraph, Theorem, Verdict};
use serde_json::{json, Value};

use crate::format::{parse_hypergraph, write_hypergraph, write_multigraph, GraphFormat};
use crate::report::{self, content_hash, Report};
use crate::verify::{self, parse_sizes, Suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_EXCLUDED: i32 = 10;

#[derive(Debug, Parser)]
#[command(name = "hypercert", version, about = "Spectral certificates of non-2-colorability for uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
    /// Absolute eigenvalue tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Slack the average degree must exceed the bound by to exclude.
    #[arg(long, global = true, default_value_t = hypercert::bounds::DEFAULT_MARGIN_TOL)]
    margin_tol: f64,
    /// Largest vertex count the exhaustive oracle accepts.
    #[arg(long, global = true, default_value_t = 24)]
    cap: usize,
    /// Largest projected multigraph (vertex count) that will be built.
    #[arg(long, global = true, default_value_t = hypercert::project::DEFAULT_VERTEX_CAP)]
    pair_cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a hypergraph file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file (stdout when omitted).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Apply the 3/4/5-uniform certificate.
    Certify {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        theorem: TheoremArg,
        /// Also settle 2-colorability by exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Extremal eigenvalues of a projection.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "underlying")]
        target: SpectrumTarget,
    },
    /// Export a projection as a matrix or edge list.
    Project {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "underlying")]
        target: SpectrumTarget,
        /// Subset size for the s-set graph.
        #[arg(short, long, default_value_t = 2)]
        s: usize,
        #[arg(long, value_enum, default_value = "edges")]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive ground-truth queries.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum)]
        query: OracleQuery,
        /// Colors for `minmono`.
        #[arg(short, long, default_value_t = 2)]
        k: u32,
        /// Largest k^n searched by `minmono`.
        #[arg(long, default_value_t = 1 << 26)]
        budget: u64,
    },
    /// Run the randomized verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Vertex-count range, e.g. `8..12`.
        #[arg(long)]
        sizes: Option<String>,
        /// Instances per suite (0 = suite default).
        #[arg(long, default_value_t = 0)]
        count: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// All r-subsets of n vertices.
    Complete { n: usize, r: usize },
    /// r-subsets whose 1-based label sum is congruent to t mod m.
    Modular { n: usize, r: usize, m: u64, t: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Auto,
    #[value(name = "3u")]
    ThreeU,
    #[value(name = "4u")]
    FourU,
    #[value(name = "5u")]
    FiveU,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpectrumTarget {
    Underlying,
    Sset2,
    Graph,
}

impl SpectrumTarget {
    fn name(self) -> &'static str {
        match self {
            SpectrumTarget::Underlying => "underlying",
            SpectrumTarget::Sset2 => "sset2",
            SpectrumTarget::Graph => "graph",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleQuery {
    #[value(name = "2color")]
    TwoColor,
    Minmono,
    Chromatic,
}

struct Input {
    hypergraph: Hypergraph,
    hash: String,
}

fn read_input(path: &Path) -> anyhow::Result<Input> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text = std::str::from_utf8(&bytes).context("input is not UTF-8")?;
    let hypergraph = parse_hypergraph(text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Input {
        hypergraph,
        hash: content_hash(&bytes),
    })
}

fn project(h: &Hypergraph, target: SpectrumTarget, s: usize, cap: usize) -> anyhow::Result<Multigraph> {
    Ok(match target {
        SpectrumTarget::Underlying => underlying_graph(h),
        SpectrumTarget::Sset2 => sset_graph(h, s, cap)?,
        SpectrumTarget::Graph => {
            if !h.is_uniform_of(2) {
                bail!("target `graph` needs a 2-uniform input");
            }
            underlying_graph(h)
        }
    })
}

fn emit(out: &Value, json_out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(out)? + "\n";
    match json_out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn write_output(text: &str, path: Option<&Path>) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

impl Cli {
    fn eigen(&self) -> EigenOptions {
        EigenOptions {
            tol: self.tol,
            ..EigenOptions::default()
        }
    }

    fn limits(&self) -> OracleLimits {
        OracleLimits {
            max_vertices: self.cap,
            ..OracleLimits::default()
        }
    }

    fn execute(&self) -> anyhow::Result<i32> {
        match &self.command {
            Command::Gen { kind, output } => {
                let h = match *kind {
                    GenKind::Complete { n, r } => generate_complete(n, r)?,
                    GenKind::Modular { n, r, m, t } => generate_modular(n, r, m, t)?,
                };
                write_output(&write_hypergraph(&h), output.as_deref())?;
                eprintln!(
                    "n={} edges={} avg_degree={}",
                    h.vertex_count(),
                    h.edge_count(),
                    h.average_degree()
                );
                Ok(EXIT_OK)
            }
            Command::Certify { file, theorem, oracle } => self.certify(file, *theorem, *oracle),
            Command::Spectrum { file, target } => {
                let input = read_input(file)?;
                let mut report = Report::new("spectrum");
                report.input_hash = Some(input.hash);
                let g = report.time("project", || project(&input.hypergraph, *target, 2, self.pair_cap))?;
                let s = report.time("eigensolve", || graph_spectrum(&g, &self.eigen()))?;
                report.results.push(report::spectrum(&s, target.name()));
                emit(&report.to_json(), self.json_out.as_deref())?;
                Ok(EXIT_OK)
            }
            Command::Project {
                file,
                target,
                s,
                format,
                output,
            } => {
                let input = read_input(file)?;
                let g = project(&input.hypergraph, *target, *s, self.pair_cap)?;
                write_output(&write_multigraph(&g, *format), output.as_deref())?;
                Ok(EXIT_OK)
            }
            Command::Oracle { file, query, k, budget } => {
                let input = read_input(file)?;
                let limits = OracleLimits {
                    search_budget: *budget,
                    ..self.limits()
                };
                let mut report = Report::new("oracle");
                report.input_hash = Some(input.hash);
                let h = &input.hypergraph;
                let result = report.time("search", || -> anyhow::Result<Value> {
                    Ok(match query {
                        OracleQuery::TwoColor => report::oracle("2color", &is_weak_2_colorable(h, &limits)?),
                        OracleQuery::Minmono => {
                            let g = underlying_graph(h);
                            let mut v = report::oracle("minmono", &min_mono_edges(&g, *k, &limits)?);
                            v["k"] = json!(k);
                            v["edges"] = json!(g.total_multiplicity());
                            v
                        }
                        OracleQuery::Chromatic => {
                            report::oracle("chromatic", &chromatic_number(&underlying_graph(h), &limits)?)
                        }
                    })
                })?;
                report.results.push(result);
                emit(&report.to_json(), self.json_out.as_deref())?;
                Ok(EXIT_OK)
            }
            Command::Verify {
                suite,
                seed,
                sizes,
                count,
            } => {
                let cfg = SuiteConfig {
                    seed: *seed,
                    count: *count,
                    sizes: sizes.as_deref().map(parse_sizes).transpose().map_err(anyhow::Error::msg)?,
                    eigen: self.eigen(),
                    limits: self.limits(),
                };
                let mut report = Report::new("verify");
                report.seed = Some(*seed);
                let mut all_passed = true;
                for (name, outcomes) in report.time("suites", || verify::run(*suite, &cfg)) {
                    for o in &outcomes {
                        eprintln!("{} [{name}] {} ({} checks)", if o.passed() { "PASS" } else { "FAIL" }, o.name, o.checks);
                        all_passed &= o.passed();
                    }
                    report.results.push(json!({
                        "kind": "suite",
                        "suite": name,
                        "properties": outcomes.iter().map(|o| o.to_json()).collect::<Vec<_>>(),
                    }));
                }
                emit(&report.to_json(), self.json_out.as_deref())?;
                Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
            }
        }
    }

    fn certify(&self, file: &Path, theorem: TheoremArg, with_oracle: bool) -> anyhow::Result<i32> {
        let input = read_input(file)?;
        let h = &input.hypergraph;
        let theorem = match theorem {
            TheoremArg::Auto => None,
            TheoremArg::ThreeU => Some(Theorem::ThreeUniform),
            TheoremArg::FourU => Some(Theorem::FourUniform),
            TheoremArg::FiveU => Some(Theorem::FiveUniform),
        };
        let opts = CertifyOptions {
            eigen: self.eigen(),
            margin_tol: self.margin_tol,
            vertex_cap: self.pair_cap,
        };
        let mut report = Report::new("certify");
        report.input_hash = Some(input.hash.clone());
        let cert = report.time("certify", || certify(h, theorem, &opts))?;
        let mut entry = report::certificate(&cert, &input.hash);
        entry["note"] = json!(match (cert.verdict, cert.tight) {
            (Verdict::Excluded, _) => "the spectral inequality is violated, so no weak 2-coloring exists",
            (Verdict::Inconclusive, true) => "the inequality holds with equality; the certificate is inconclusive",
            (Verdict::Inconclusive, false) =>
                "the inequality holds; the certificate is one-sided and says nothing about 2-colorability",
        });
        report.results.push(entry);
        if with_oracle {
            let truth = report.time("oracle", || is_weak_2_colorable(h, &self.limits()))?;
            let mut v = report::oracle("2color", &truth);
            v["consistent"] = json!(!(cert.verdict == Verdict::Excluded && truth.answer));
            report.results.push(v);
        }
        emit(&report.to_json(), self.json_out.as_deref())?;
        Ok(match cert.verdict {
            Verdict::Excluded => EXIT_EXCLUDED,
            Verdict::Inconclusive => EXIT_OK,
        })
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match cli.execute() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_ERROR
        }
    }
}
