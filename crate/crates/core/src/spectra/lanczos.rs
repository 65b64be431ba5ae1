//! Lanczos iteration with full reorthogonalization for the two extremal
//! eigenvalues of a large symmetric operator.
//!
//! Convergence is declared when the residual norm `|beta_j * s_j|` of both
//! extremal Ritz pairs falls below the tolerance. That residual bounds the
//! distance from each Ritz value to the spectrum.

use alloc::vec::Vec;

use libm::sqrt;

use super::dense::tridiagonal_ql;
use super::SymmetricOperator;
use crate::{Error, Result};

/// Ritz values are re-examined every this many steps.
const CHECK_EVERY: usize = 8;

pub(crate) struct LanczosOutcome {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub residual: f64,
}

pub(crate) fn extremal<A: SymmetricOperator + ?Sized>(
    op: &A,
    tol: f64,
    max_steps: usize,
) -> Result<LanczosOutcome> {
    let n = op.dim();
    let steps = max_steps.min(n);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(steps);
    let mut alpha: Vec<f64> = Vec::with_capacity(steps);
    let mut beta: Vec<f64> = Vec::with_capacity(steps);

    let mut q = start_vector(n);
    let mut w = alloc::vec![0.0; n];
    for j in 0..steps {
        op.apply(&q, &mut w);
        let a = dot(&q, &w);
        axpy(-a, &q, &mut w);
        if let Some(prev) = basis.last() {
            axpy(-beta[j - 1], prev, &mut w);
        }
        basis.push(q.clone());
        alpha.push(a);
        // two passes of classical Gram-Schmidt keep the basis orthogonal
        for _ in 0..2 {
            for v in &basis {
                let c = dot(v, &w);
                axpy(-c, v, &mut w);
            }
        }
        let b = norm(&w);
        beta.push(b);
        let exhausted = b <= f64::EPSILON * op.norm_bound().max(1.0) || j + 1 == n;
        if exhausted || (j + 1) % CHECK_EVERY == 0 || j + 1 == steps {
            let out = ritz_extremes(&alpha, &beta)?;
            if exhausted || out.residual <= tol {
                return Ok(out);
            }
        }
        for (qi, wi) in q.iter_mut().zip(&w) {
            *qi = wi / b;
        }
    }
    Err(Error::NoConvergence(steps))
}

fn ritz_extremes(alpha: &[f64], beta: &[f64]) -> Result<LanczosOutcome> {
    let m = alpha.len();
    let mut d = alpha.to_vec();
    let mut e = alloc::vec![0.0; m];
    e[1..m].copy_from_slice(&beta[..m - 1]);
    let mut last = alloc::vec![0.0; m];
    last[m - 1] = 1.0;
    tridiagonal_ql(&mut d, &mut e, Some(&mut last))?;
    let (mut lo, mut hi) = (0, 0);
    for i in 1..m {
        if d[i] < d[lo] {
            lo = i;
        }
        if d[i] > d[hi] {
            hi = i;
        }
    }
    let b = beta[m - 1];
    let residual = libm::fabs(b * last[lo]).max(libm::fabs(b * last[hi]));
    Ok(LanczosOutcome {
        lambda_min: d[lo],
        lambda_max: d[hi],
        residual,
    })
}

/// Deterministic pseudo-random unit start vector (splitmix64).
fn start_vector(n: usize) -> Vec<f64> {
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15 ^ n as u64;
    let mut v: Vec<f64> = (0..n)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect();
    let s = norm(&v);
    v.iter_mut().for_each(|x| *x /= s);
    v
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    sqrt(dot(a, a))
}

fn axpy(c: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}
