//! Binomial coefficients, lexicographic k-subset enumeration and colex ranks.

use alloc::vec::Vec;

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Iterator over the `k`-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Colexicographic rank of a strictly increasing subset: `sum C(a_i, i+1)`.
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &a)| binomial(a as u64, i as u64 + 1) as usize)
        .sum()
}

/// Inverse of [`colex_rank`] for subsets of size `k`.
pub fn colex_unrank(mut rank: usize, k: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; k];
    for i in (1..=k).rev() {
        // largest a with C(a, i) <= rank
        let mut a = i - 1;
        while binomial(a as u64 + 1, i as u64) as usize <= rank {
            a += 1;
        }
        out[i - 1] = a;
        rank -= binomial(a as u64, i as u64) as usize;
    }
    out
}

/// Rank of the pair `{a, b}` in colex order over 2-subsets.
#[inline]
pub fn pair_rank(a: usize, b: usize) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    lo + hi * (hi - 1) / 2
}
