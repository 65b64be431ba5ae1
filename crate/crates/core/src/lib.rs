//! Spectral certificates of non-2-colorability for uniform hypergraphs.
//!
//! A hypergraph is projected onto two integer multigraphs, its underlying
//! graph and its 2-subset graph. The extremal eigenvalues of those
//! multigraphs, together with the hypergraph's average degree, feed a set of
//! inequalities that every weakly 2-colorable 3, 4 or 5-uniform hypergraph
//! must satisfy. A violated inequality is a certificate that no weak
//! 2-coloring exists. Certificates are one-sided: `Inconclusive` carries no
//! information.
//!
//! The [`oracle`] module holds exhaustive ground-truth searches used to
//! validate certificates on small instances.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod combin;
pub mod corpus;
mod error;
pub mod hypergraph;
pub mod multigraph;
pub mod oracle;
pub mod project;
pub mod spectra;

pub use bounds::{Certificate, CertifyOptions, Theorem, Verdict};
pub use error::{Error, Result};
pub use hypergraph::{Coloring, ColoringStats, Hypergraph, SplitType};
pub use multigraph::Multigraph;
pub use spectra::{EigenOptions, SpectralSummary, SymMatrix};

/// Exact rational used for degrees and fractions.
pub type Rational = num_rational::Ratio<i64>;

/// Lossy conversion of an exact rational to `f64`.
pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
