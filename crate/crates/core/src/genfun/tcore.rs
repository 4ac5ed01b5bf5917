//! Mod-`t` crank of `t`-cores by enumerating the lattice of zero-sum vectors
//! `v` with `t |v|^2 / 2 + sum i v_i <= n_max`.

use rayon::prelude::*;

use super::{StatTable, Statistic};
use crate::combinat::tcore_crank_weights;
use crate::error::Result;
use crate::laurent::LaurentPoly;

struct Search<'a> {
    t: i128,
    weights: &'a [i64],
    /// `2 * n_max`; the doubled form `sum (t x_i^2 + 2 i x_i)` stays integral.
    cap2: i128,
    /// `suffix_sum[j] = sum_{i >= j} i`, `suffix_sq[j] = sum_{i >= j} i^2`.
    suffix_sum: Vec<i128>,
    suffix_sq: Vec<i128>,
}

impl Search<'_> {
    fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Can coordinates `j..` summing to `c` keep the doubled form within
    /// `cap2 - q2`? Uses the exact real minimum under the sum constraint:
    /// `((t c + S1)^2 / m - S2) / t` with `m = dim - j`.
    fn feasible(&self, j: usize, c: i128, q2: i128) -> bool {
        let m = (self.dim() - j) as i128;
        if m == 0 {
            return c == 0 && q2 <= self.cap2;
        }
        let a = self.t * c + self.suffix_sum[j];
        // q2 + (a^2/m - S2)/t <= cap2, multiplied through by m t > 0.
        q2 * m * self.t + a * a - m * self.suffix_sq[j] <= self.cap2 * m * self.t
    }

    /// Real minimiser of coordinate `j` given that `j..` sum to `c`.
    fn centre(&self, j: usize, c: i128) -> f64 {
        let m = (self.dim() - j) as f64;
        let lambda = (self.t as f64 * c as f64 + self.suffix_sum[j] as f64) / m;
        (lambda - j as f64) / self.t as f64
    }

    fn rec(&self, j: usize, c: i128, q2: i128, crank: i64, counts: &mut [Vec<u64>]) {
        let t = self.t as i64;
        if j + 1 == self.dim() {
            let x = c;
            let q2 = q2 + self.t * x * x + 2 * j as i128 * x;
            if q2 <= self.cap2 {
                let size = (q2 / 2) as usize;
                let class = (crank + self.weights[j] * x as i64).rem_euclid(t) as usize;
                counts[size][class] += 1;
            }
            return;
        }
        let mut visit = |x: i128| -> bool {
            let q = q2 + self.t * x * x + 2 * j as i128 * x;
            if !self.feasible(j + 1, c - x, q) {
                return false;
            }
            self.rec(j + 1, c - x, q, crank + self.weights[j] * x as i64, counts);
            true
        };
        // The bound is convex in x, so its feasible set is an interval
        // containing the real minimiser.
        let lo = self.centre(j, c).floor() as i128;
        let mut x = lo + 1;
        while visit(x) {
            x += 1;
        }
        let mut x = lo;
        while visit(x) {
            x -= 1;
        }
    }
}

/// `rows[n][r]` = number of `t`-cores of `n` in crank class `r`, for `n <= n_max`.
pub fn tcore_crank_counts(t: u32, n_max: usize) -> Result<Vec<Vec<u64>>> {
    let weights = tcore_crank_weights(t)?;
    let dim = t as usize;
    let mut suffix_sum = vec![0i128; dim + 1];
    let mut suffix_sq = vec![0i128; dim + 1];
    for j in (0..dim).rev() {
        suffix_sum[j] = suffix_sum[j + 1] + j as i128;
        suffix_sq[j] = suffix_sq[j + 1] + (j * j) as i128;
    }
    let search = Search {
        t: t as i128,
        weights,
        cap2: 2 * n_max as i128,
        suffix_sum,
        suffix_sq,
    };
    let empty = || vec![vec![0u64; dim]; n_max + 1];
    // Split on the first coordinate for parallelism.
    let lo = search.centre(0, 0).floor() as i128;
    let mut firsts = Vec::new();
    let mut x = lo + 1;
    while search.feasible(1, -x, search.t * x * x) {
        firsts.push(x);
        x += 1;
    }
    let mut x = lo;
    while search.feasible(1, -x, search.t * x * x) {
        firsts.push(x);
        x -= 1;
    }
    let counts = firsts
        .par_iter()
        .map(|&x| {
            let mut counts = empty();
            search.rec(1, -x, search.t * x * x, weights[0] * x as i64, &mut counts);
            counts
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (ca, cb) in ra.iter_mut().zip(rb) {
                    *ca += cb;
                }
            }
            a
        });
    Ok(counts)
}

/// Crank classes of the `t`-cores of `n`, as a table on `0..t`.
pub fn tcore_crank_table(t: u32, n: u32) -> Result<StatTable> {
    let rows = tcore_crank_counts(t, n as usize)?;
    Ok(StatTable::from_counts(
        Statistic::TCoreCrank(t),
        n,
        rows[n as usize]
            .iter()
            .enumerate()
            .map(|(m, &c)| (m as i64, c)),
    ))
}

/// Rows `sum_r c_t(r, n) w^r` for `n <= n_max`.
pub fn expand_tcore_crank(t: u32, n_max: usize) -> Result<Vec<LaurentPoly>> {
    Ok(tcore_crank_counts(t, n_max)?
        .into_iter()
        .map(|row| {
            LaurentPoly::from_terms(row.into_iter().enumerate().map(|(r, c)| (r as i64, c)))
        })
        .collect())
}
