use std::f64::consts::{LN_2, TAU};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{PrincipalPoly, RootSet};

/// `ln |x|` for integers of any size (`-inf` at zero).
pub fn ln_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (x.abs() >> shift).to_f64().unwrap().ln() + shift as f64 * LN_2
}

/// `L(f) = sum |a_j| / sqrt(|a_0 a_d|)`, kept exact as `L^2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErdosTuran {
    /// `L^2` as `numerator/denominator` in lowest terms.
    pub l_squared: String,
    pub log_l: f64,
    /// `log L / d`; 0 for constants.
    pub log_l_over_d: f64,
    pub degree: usize,
}

pub fn erdos_turan_l_squared(coeffs: &[BigInt]) -> BigRational {
    let d = coeffs.len() - 1;
    let total: BigInt = coeffs.iter().map(BigInt::abs).sum();
    BigRational::new(&total * &total, (&coeffs[0] * &coeffs[d]).abs())
}

pub fn erdos_turan(f: &PrincipalPoly) -> ErdosTuran {
    erdos_turan_coeffs(&f.coeffs)
}

pub fn erdos_turan_coeffs(coeffs: &[BigInt]) -> ErdosTuran {
    assert!(
        !coeffs[0].is_zero() && !coeffs[coeffs.len() - 1].is_zero(),
        "L(f) needs nonzero extreme coefficients"
    );
    let d = coeffs.len() - 1;
    let l2 = erdos_turan_l_squared(coeffs);
    let total: BigInt = coeffs.iter().map(BigInt::abs).sum();
    let log_l = ln_abs(&total) - 0.5 * (ln_abs(&coeffs[0]) + ln_abs(&coeffs[d]));
    ErdosTuran {
        l_squared: l2.to_string(),
        log_l,
        log_l_over_d: if d == 0 { 0.0 } else { log_l / d as f64 },
        degree: d,
    }
}

/// Angle in `[0, 2 pi)`.
pub fn angle(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    let a = if a < 0.0 { a + TAU } else { a };
    // A tiny negative angle can round up to exactly 2 pi.
    if a >= TAU {
        0.0
    } else {
        a
    }
}

/// Star discrepancy of the normalised angles `u_j = arg z_j / 2 pi` against
/// the uniform distribution: `max_j max(j/d - u_j, u_j - (j-1)/d)` over the
/// sorted `u_j`.
pub fn star_discrepancy(r: &RootSet) -> f64 {
    star_discrepancy_of(&r.roots)
}

pub fn star_discrepancy_of(roots: &[Complex64]) -> f64 {
    let d = roots.len();
    if d == 0 {
        return 0.0;
    }
    let mut u: Vec<f64> = roots.iter().map(|&z| angle(z) / TAU).collect();
    u.sort_by(f64::total_cmp);
    let df = d as f64;
    u.iter()
        .enumerate()
        .map(|(i, &x)| {
            let j = (i + 1) as f64;
            (j / df - x).max(x - (j - 1.0) / df)
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialBin {
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

/// Histogram of `|z_j|` and a rough count of its separated peaks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialProfile {
    pub bins: Vec<RadialBin>,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub delta: f64,
    /// Roots with `|z|` outside `[1 - delta, 1 + delta]`.
    pub sporadic: usize,
    /// Peaks of height at least 2 left after merging neighbours whose
    /// separating dip stays above half the lower peak.
    pub modes: usize,
    pub bimodal: bool,
}

pub const DEFAULT_SPORADIC_DELTA: f64 = 0.05;

pub fn radial_profile(r: &RootSet, bins: usize, delta: f64) -> RadialProfile {
    radial_profile_of(&r.roots, bins, delta)
}

pub fn radial_profile_of(roots: &[Complex64], bins: usize, delta: f64) -> RadialProfile {
    let m: Vec<f64> = roots.iter().map(|z| z.norm()).collect();
    if m.is_empty() {
        return RadialProfile {
            bins: Vec::new(),
            min: 0.0,
            max: 0.0,
            mean: 0.0,
            delta,
            sporadic: 0,
            modes: 0,
            bimodal: false,
        };
    }
    let min = m.iter().copied().fold(f64::INFINITY, f64::min);
    let max = m.iter().copied().fold(0.0, f64::max);
    let mean = m.iter().sum::<f64>() / m.len() as f64;
    let sporadic = m.iter().filter(|&&x| (x - 1.0).abs() > delta).count();
    // Moduli equal up to rounding form a single bin.
    let spread = max - min;
    let hist: Vec<RadialBin> = if spread <= 1e-9 * max.max(1.0) || bins <= 1 {
        vec![RadialBin {
            lo: min,
            hi: max,
            count: m.len(),
        }]
    } else {
        let w = spread / bins as f64;
        let mut counts = vec![0usize; bins];
        for &x in &m {
            let k = (((x - min) / w) as usize).min(bins - 1);
            counts[k] += 1;
        }
        counts
            .into_iter()
            .enumerate()
            .map(|(k, count)| RadialBin {
                lo: min + w * k as f64,
                hi: if k + 1 == bins { max } else { min + w * (k + 1) as f64 },
                count,
            })
            .collect()
    };
    let counts: Vec<usize> = hist.iter().map(|b| b.count).collect();
    let modes = count_modes(&counts);
    RadialProfile {
        bins: hist,
        min,
        max,
        mean,
        delta,
        sporadic,
        modes,
        bimodal: modes >= 2,
    }
}

fn count_modes(h: &[usize]) -> usize {
    // Plateau-aware local maxima as (height, index).
    let mut peaks: Vec<(usize, usize)> = Vec::new();
    let n = h.len();
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && h[j + 1] == h[i] {
            j += 1;
        }
        let left_ok = i == 0 || h[i - 1] < h[i];
        let right_ok = j + 1 == n || h[j + 1] < h[i];
        if h[i] > 0 && left_ok && right_ok {
            peaks.push((h[i], i));
        }
        i = j + 1;
    }
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for p in peaks {
        if let Some(&last) = merged.last() {
            let dip = *h[last.1..=p.1].iter().min().unwrap();
            if 2 * dip > last.0.min(p.0) {
                if p.0 > last.0 {
                    *merged.last_mut().unwrap() = p;
                }
                continue;
            }
        }
        merged.push(p);
    }
    merged.iter().filter(|p| p.0 >= 2).count()
}

/// Largest rank of a strongly unimodal sequence of size `n`: with `s` the
/// largest index such that `s(s+1)/2 <= n`, the sequence `s + (n - s(s+1)/2),
/// s-1, ..., 1` attains `s - 1`, and `s + 1` parts would need size at least
/// `(s+1)(s+2)/2 > n`.
pub fn strongly_unimodal_degree(n: u64) -> u64 {
    assert!(n >= 1, "defined for n >= 1");
    let mut s = 0u64;
    while (s + 1) * (s + 2) / 2 <= n {
        s += 1;
    }
    s - 1
}

/// `k - 1` for the least `k` with `k(k+1)/2 >= n`. Agrees with
/// [`strongly_unimodal_degree`] exactly when `n` is triangular.
pub fn next_triangular_index_minus_one(n: u64) -> u64 {
    assert!(n >= 1, "defined for n >= 1");
    let mut k = 1u64;
    while k * (k + 1) / 2 < n {
        k += 1;
    }
    k - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_of_simple_polynomials() {
        let f = [1, 1].map(BigInt::from);
        let et = erdos_turan_coeffs(&f);
        assert_eq!(et.l_squared, "4");
        assert!((et.log_l - 2f64.ln()).abs() < 1e-15);
        let g = [3, 0, 5, 2].map(BigInt::from);
        let scaled: Vec<BigInt> = g.iter().map(|x| x * 7).collect();
        assert_eq!(erdos_turan_l_squared(&g), erdos_turan_l_squared(&scaled));
    }

    #[test]
    fn discrepancy_extremes() {
        let d = 12;
        let roots: Vec<Complex64> = (0..d)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / d as f64))
            .collect();
        assert!((star_discrepancy_of(&roots) - 1.0 / d as f64).abs() < 1e-12);
        let clumped = vec![Complex64::new(1.0, 0.0); 50];
        assert!(star_discrepancy_of(&clumped) > 0.97);
    }

    #[test]
    fn angles_in_range() {
        assert_eq!(angle(Complex64::new(1.0, 0.0)), 0.0);
        assert!(angle(Complex64::new(1.0, -1e-300)) < TAU);
        assert!(angle(Complex64::new(0.0, -1.0)) > 4.0);
        assert!((angle(Complex64::new(-1.0, 0.0)) - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn profiles() {
        let circle: Vec<Complex64> = (0..40)
            .map(|k| Complex64::from_polar(1.0, k as f64 * 0.3))
            .collect();
        let p = radial_profile_of(&circle, 20, 0.05);
        assert_eq!(p.bins.len(), 1);
        assert_eq!(p.sporadic, 0);
        assert!(!p.bimodal);
        let mut two: Vec<Complex64> = (0..30)
            .map(|k| Complex64::from_polar(0.6, k as f64))
            .collect();
        two.extend((0..30).map(|k| Complex64::from_polar(1.0, k as f64)));
        let p = radial_profile_of(&two, 10, 0.05);
        assert!(p.bimodal);
        assert_eq!(p.sporadic, 30);
    }

    #[test]
    fn degree_law() {
        assert_eq!(strongly_unimodal_degree(1), 0);
        assert_eq!(strongly_unimodal_degree(3), 1);
        assert_eq!(strongly_unimodal_degree(200), 18);
        assert_eq!(next_triangular_index_minus_one(200), 19);
        for s in 1..30u64 {
            let t = s * (s + 1) / 2;
            assert_eq!(strongly_unimodal_degree(t), next_triangular_index_minus_one(t));
        }
    }
}
