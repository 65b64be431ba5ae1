//! Extremal eigenvalues of symmetric matrices and Rayleigh quotients.
//!
//! Small matrices are fully diagonalized; above
//! [`EigenOptions::dense_limit`] a reorthogonalized Lanczos iteration is used
//! and its residual bound must reach the requested tolerance, otherwise
//! [`Error::NoConvergence`] is returned.

mod dense;
mod lanczos;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::{Error, Multigraph, Rational, Result};

/// A symmetric linear operator on `R^n`.
pub trait SymmetricOperator {
    fn dim(&self) -> usize;
    /// `y = A x`
    fn apply(&self, x: &[f64], y: &mut [f64]);
    /// Any upper bound on the spectral radius.
    fn norm_bound(&self) -> f64;
}

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Checks exact symmetry.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != n * n {
            return Err(Error::Shape(alloc::format!(
                "{} entries for a {n}x{n} matrix",
                data.len()
            )));
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("rows of unequal length".into()));
        }
        SymMatrix::new(n, rows.concat())
    }

    pub fn from_multigraph(g: &Multigraph) -> Result<Self> {
        SymMatrix::new(
            g.vertex_count(),
            g.matrix().iter().map(|&m| m as f64).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn scaled(&self, c: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0.0)
    }
}

impl SymmetricOperator for SymMatrix {
    fn dim(&self) -> usize {
        self.n
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }

    fn norm_bound(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| libm::fabs(self.get(i, j))).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl SymmetricOperator for Multigraph {
    fn dim(&self) -> usize {
        self.vertex_count()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self
                .row(i)
                .iter()
                .zip(x)
                .filter(|(&m, _)| m != 0)
                .map(|(&m, b)| m as f64 * b)
                .sum();
        }
    }

    fn norm_bound(&self) -> f64 {
        self.max_degree() as f64
    }
}

/// Eigensolver configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    /// Absolute error bound on each reported extremal eigenvalue.
    pub tol: f64,
    /// Matrices up to this dimension are fully diagonalized.
    pub dense_limit: usize,
    /// Lanczos step cap.
    pub max_iter: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tol: 1e-9,
            dense_limit: 1200,
            max_iter: 3000,
        }
    }
}

/// Extremal eigenvalues of one matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary {
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// Absolute error bound on both values.
    pub tolerance: f64,
    pub n: usize,
    /// Average degree when the matrix is a multigraph adjacency.
    pub average_degree: Option<Rational>,
}

/// `(lambda_min, lambda_max)` of a symmetric operator within `opts.tol`.
pub fn extremal_of<A: SymmetricOperator + ?Sized>(
    op: &A,
    dense: impl FnOnce() -> Vec<f64>,
    opts: &EigenOptions,
) -> Result<(f64, f64, f64)> {
    let n = op.dim();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if op.norm_bound() == 0.0 {
        return Ok((0.0, 0.0, opts.tol));
    }
    if n <= opts.dense_limit {
        let ev = dense::symmetric_eigenvalues(&dense(), n)?;
        Ok((ev[0], ev[n - 1], opts.tol))
    } else {
        let out = lanczos::extremal(op, opts.tol, opts.max_iter)?;
        Ok((out.lambda_min, out.lambda_max, out.residual.max(f64::EPSILON)))
    }
}

/// Extremal eigenvalues of a symmetric matrix.
pub fn extremal_eigenvalues(m: &SymMatrix, opts: &EigenOptions) -> Result<SpectralSummary> {
    let (lambda_min, lambda_max, tolerance) = extremal_of(m, || m.data.clone(), opts)?;
    Ok(SpectralSummary {
        lambda_min,
        lambda_max,
        tolerance,
        n: m.n,
        average_degree: None,
    })
}

/// Extremal eigenvalues of a multigraph's adjacency matrix.
pub fn graph_spectrum(g: &Multigraph, opts: &EigenOptions) -> Result<SpectralSummary> {
    let dense = || g.matrix().iter().map(|&m| m as f64).collect();
    let (lambda_min, lambda_max, tolerance) = extremal_of(g, dense, opts)?;
    Ok(SpectralSummary {
        lambda_min,
        lambda_max,
        tolerance,
        n: g.vertex_count(),
        average_degree: Some(g.average_degree()),
    })
}

/// Same as [`graph_spectrum`] but always through Lanczos, regardless of size.
pub fn graph_spectrum_iterative(g: &Multigraph, opts: &EigenOptions) -> Result<SpectralSummary> {
    let forced = EigenOptions {
        dense_limit: 0,
        ..*opts
    };
    graph_spectrum(g, &forced)
}

/// Every eigenvalue, ascending, by full diagonalization.
pub fn full_spectrum(m: &SymMatrix) -> Result<Vec<f64>> {
    dense::symmetric_eigenvalues(&m.data, m.n)
}

/// `(x* M x) / (x* x)` for a nonzero complex vector.
pub fn rayleigh_quotient(m: &SymMatrix, x: &[Complex64]) -> Result<f64> {
    if x.len() != m.n {
        return Err(Error::Shape(alloc::format!(
            "vector of length {} for a {}x{} matrix",
            x.len(),
            m.n,
            m.n
        )));
    }
    let denom: f64 = x.iter().map(|z| z.norm_sqr()).sum();
    if denom == 0.0 {
        return Err(Error::ZeroVector);
    }
    let mut num = Complex64::new(0.0, 0.0);
    for (i, xi) in x.iter().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, xj) in x.iter().enumerate() {
            acc += xj * m.get(i, j);
        }
        num += xi.conj() * acc;
    }
    Ok(num.re / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::generate_complete;
    use crate::project::underlying_graph;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn complete_triple_system() {
        let g = underlying_graph(&generate_complete(5, 3).unwrap());
        let s = graph_spectrum(&g, &EigenOptions::default()).unwrap();
        assert!(close(s.lambda_min, -3.0, 1e-9));
        assert!(close(s.lambda_max, 12.0, 1e-9));
        assert_eq!(s.average_degree, Some(Rational::from_integer(12)));
    }

    #[test]
    fn petersen_and_zero() {
        let s = graph_spectrum(&Multigraph::petersen(), &EigenOptions::default()).unwrap();
        assert!(close(s.lambda_min, -2.0, 1e-9));
        assert!(close(s.lambda_max, 3.0, 1e-9));
        let z = graph_spectrum(&Multigraph::new(4), &EigenOptions::default()).unwrap();
        assert_eq!((z.lambda_min, z.lambda_max), (0.0, 0.0));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SymMatrix::new(0, vec![]), Err(Error::EmptyMatrix));
        assert_eq!(
            SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]),
            Err(Error::NotSymmetric(1, 0))
        );
        let m = SymMatrix::from_multigraph(&Multigraph::cycle(4)).unwrap();
        let zero = vec![Complex64::new(0.0, 0.0); 4];
        assert_eq!(rayleigh_quotient(&m, &zero), Err(Error::ZeroVector));
    }

    #[test]
    fn rayleigh_examples() {
        let m = SymMatrix::from_multigraph(&Multigraph::complete(6, 1)).unwrap();
        let ones = vec![Complex64::new(1.0, 0.0); 6];
        assert!(close(rayleigh_quotient(&m, &ones).unwrap(), 5.0, 1e-12));
        let mut e2 = vec![Complex64::new(0.0, 0.0); 6];
        e2[2] = Complex64::new(0.0, 1.0);
        assert_eq!(rayleigh_quotient(&m, &e2).unwrap(), 0.0);
    }

    #[test]
    fn lanczos_matches_dense() {
        let opts = EigenOptions::default();
        for g in [
            Multigraph::petersen(),
            Multigraph::cycle(17),
            underlying_graph(&generate_complete(7, 3).unwrap()),
        ] {
            let a = graph_spectrum(&g, &opts).unwrap();
            let b = graph_spectrum_iterative(&g, &opts).unwrap();
            assert!(close(a.lambda_min, b.lambda_min, 1e-9), "{a:?} {b:?}");
            assert!(close(a.lambda_max, b.lambda_max, 1e-9), "{a:?} {b:?}");
        }
    }
}
