//! Aberth–Ehrlich simultaneous iteration. Runs in `f64` first and repeats in
//! extended precision when that fails, when the degree is large, or when the
//! coefficients do not fit in `f64`.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::extended;
use super::PrincipalPoly;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    /// Required bound on the backward error of every root.
    pub tolerance: f64,
    pub max_iterations: u32,
    pub seed: u64,
    /// Significand bits of the extended-precision stage.
    pub extended_bits: usize,
    /// Skip straight to extended precision.
    pub force_extended: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: 500,
            seed: 0x5eed_2024,
            extended_bits: 128,
            force_extended: false,
        }
    }
}

/// Roots of a polynomial with their quality.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Largest backward error `|f(z)| / sum |a_k| |z|^k` over the roots.
    pub residual_scale: f64,
    pub degree: usize,
    /// 53 for the `f64` stage, otherwise the extended significand size.
    pub precision_bits: usize,
    pub iterations: u32,
}

/// `a * 2^-shift` as `f64`, `None` on overflow.
pub(crate) fn scaled_f64(a: &BigInt, shift: u64) -> Option<f64> {
    let bits = a.bits();
    let (m, e) = if bits > 64 {
        ((a >> (bits - 64)).to_f64()?, bits as i64 - 64 - shift as i64)
    } else {
        (a.to_f64()?, -(shift as i64))
    };
    let e = i32::try_from(e).ok()?;
    let v = m * 2f64.powi(e.max(-1074));
    v.is_finite().then_some(v)
}

/// Stage 1 input: coefficients scaled by a power of two near `max |a_k|`.
fn f64_coeffs(coeffs: &[BigInt]) -> Option<Vec<f64>> {
    let shift = coeffs.iter().map(BigInt::bits).max().unwrap_or(0);
    if shift > 1000 {
        return None;
    }
    coeffs.iter().map(|a| scaled_f64(a, shift)).collect()
}

/// Evaluates `f(z)`, `f'(z)` and `sum |a_k| |z|^k`, all divided by `z^d`
/// when `|z| > 1` so nothing overflows. Returns `(f/f', backward error)`.
fn newton_and_error(a: &[f64], z: Complex64) -> (Complex64, f64) {
    let d = a.len() - 1;
    if z.norm_sqr() <= 1.0 {
        let mut p = Complex64::new(a[d], 0.0);
        let mut dp = Complex64::zero();
        let mut s = a[d].abs();
        let r = z.norm();
        for k in (0..d).rev() {
            dp = dp * z + p;
            p = p * z + a[k];
            s = s * r + a[k].abs();
        }
        (p / dp, p.norm() / s)
    } else {
        // g(y) = sum a_k y^(d-k), y = 1/z; f/f' = z / (d - y g'(y)/g(y)).
        let y = z.inv();
        let mut g = Complex64::new(a[0], 0.0);
        let mut dg = Complex64::zero();
        let mut s = a[0].abs();
        let r = y.norm();
        for &ak in &a[1..] {
            dg = dg * y + g;
            g = g * y + ak;
            s = s * r + ak.abs();
        }
        (z / (d as f64 - y * dg / g), g.norm() / s)
    }
}

/// Evenly spread starting points on `|z| = (|a_0|/|a_d|)^(1/d)` with a small
/// deterministic angular jitter.
pub(crate) fn initial_guesses(coeffs: &[BigInt], seed: u64) -> Vec<Complex64> {
    let d = coeffs.len() - 1;
    let ln = |x: &BigInt| super::ln_abs(x);
    let radius = ((ln(&coeffs[0]) - ln(&coeffs[d])) / d as f64).exp();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset = 0.4;
    (0..d)
        .map(|k| {
            let theta = TAU * (k as f64 + offset) / d as f64 + rng.gen_range(-0.1..0.1) / d as f64;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

fn aberth_f64(a: &[f64], mut z: Vec<Complex64>, opts: &SolveOptions) -> Result<RootSet> {
    let d = z.len();
    let mut done = vec![false; d];
    let mut worst = f64::INFINITY;
    for iter in 1..=opts.max_iterations {
        let mut all_done = true;
        worst = 0.0;
        for i in 0..d {
            let (ratio, err) = newton_and_error(a, z[i]);
            worst = worst.max(err);
            if done[i] {
                continue;
            }
            let mut sum = Complex64::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    sum += (z[i] - zj).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                all_done = false;
                continue;
            }
            z[i] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[i].norm() || err <= f64::EPSILON {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            worst = z
                .iter()
                .map(|&zi| newton_and_error(a, zi).1)
                .fold(0.0, f64::max);
            if worst <= opts.tolerance {
                return Ok(RootSet {
                    roots: z,
                    residual_scale: worst,
                    degree: d,
                    precision_bits: 53,
                    iterations: iter,
                });
            }
            done.iter_mut().for_each(|x| *x = false);
        }
    }
    let worst_now = z
        .iter()
        .map(|&zi| newton_and_error(a, zi).1)
        .fold(0.0, f64::max);
    if worst_now <= opts.tolerance {
        return Ok(RootSet {
            roots: z,
            residual_scale: worst_now,
            degree: d,
            precision_bits: 53,
            iterations: opts.max_iterations,
        });
    }
    Err(Error::NoConvergence {
        iterations: opts.max_iterations,
        worst_residual: worst.min(worst_now),
    })
}

/// Roots of `sum coeffs[k] w^k`. Zero roots from vanishing low coefficients
/// are returned first.
pub fn solve_coeffs(coeffs: &[BigInt], opts: &SolveOptions) -> Result<RootSet> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Err(Error::ConstantPolynomial);
    }
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    coeffs.drain(..zeros);
    let mut set = if coeffs.len() == 1 {
        RootSet {
            roots: Vec::new(),
            residual_scale: 0.0,
            degree: 0,
            precision_bits: 53,
            iterations: 0,
        }
    } else {
        solve_nonzero(&coeffs, opts)?
    };
    if zeros > 0 {
        let mut roots = vec![Complex64::zero(); zeros];
        roots.append(&mut set.roots);
        set.roots = roots;
        set.degree += zeros;
    }
    Ok(set)
}

fn solve_nonzero(coeffs: &[BigInt], opts: &SolveOptions) -> Result<RootSet> {
    let d = coeffs.len() - 1;
    let start = initial_guesses(coeffs, opts.seed);
    let scaled = if d > 500 || opts.force_extended {
        None
    } else {
        f64_coeffs(coeffs)
    };
    let seeds = match scaled {
        Some(a) => match aberth_f64(&a, start.clone(), opts) {
            Ok(set) => return Ok(set),
            Err(Error::NoConvergence { .. }) => start,
            Err(e) => return Err(e),
        },
        None => start,
    };
    extended::aberth_extended(coeffs, seeds, opts)
}

/// All roots of a principal polynomial (the factored-out power of `w`
/// contributes nothing: it only moves roots to zero, which are excluded).
pub fn solve_roots(f: &PrincipalPoly, tolerance: f64) -> Result<RootSet> {
    let opts = SolveOptions {
        tolerance,
        ..SolveOptions::default()
    };
    solve_principal(f, &opts)
}

pub fn solve_principal(f: &PrincipalPoly, opts: &SolveOptions) -> Result<RootSet> {
    if f.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    solve_coeffs(&f.coeffs, opts)
}

/// Vieta checks: `prod |z_j| = |a_0 / a_d|` and `sum z_j = -a_(d-1) / a_d`,
/// both as relative errors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VietaCheck {
    pub product_rel_error: f64,
    pub sum_rel_error: f64,
}

impl VietaCheck {
    pub fn within(&self, tol: f64) -> bool {
        self.product_rel_error <= tol && self.sum_rel_error <= tol
    }
}

pub fn vieta_check(coeffs: &[BigInt], roots: &RootSet) -> VietaCheck {
    let d = coeffs.len() - 1;
    let ln = super::ln_abs;
    let log_prod: f64 = roots.roots.iter().map(|z| z.norm().ln()).sum();
    let target_log = ln(&coeffs[0]) - ln(&coeffs[d]);
    let product_rel_error = (log_prod - target_log).exp_m1().abs();
    let sum: Complex64 = roots.roots.iter().sum();
    let target = if d >= 1 {
        -ratio_f64(&coeffs[d - 1], &coeffs[d])
    } else {
        0.0
    };
    let sum_rel_error = (sum - target).norm() / target.abs().max(1.0);
    VietaCheck {
        product_rel_error,
        sum_rel_error,
    }
}

/// `a / b` as `f64` for arbitrarily large integers.
pub(crate) fn ratio_f64(a: &BigInt, b: &BigInt) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    let sign = if a.is_negative() != b.is_negative() { -1.0 } else { 1.0 };
    sign * (super::ln_abs(a) - super::ln_abs(b)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fifth_roots_of_unity() {
        let set = solve_coeffs(&big(&[1, 1, 1, 1, 1]), &SolveOptions::default()).unwrap();
        assert_eq!(set.roots.len(), 4);
        assert!(set.residual_scale <= 1e-10);
        for z in &set.roots {
            assert!((z.norm() - 1.0).abs() < 1e-10);
            let z5 = z.powu(5);
            assert!((z5 - 1.0).norm() < 1e-9);
        }
    }

    #[test]
    fn triple_root() {
        let set = solve_coeffs(&big(&[1, 3, 3, 1]), &SolveOptions::default()).unwrap();
        assert_eq!(set.roots.len(), 3);
        for z in &set.roots {
            assert!((z + 1.0).norm() < 1e-4, "{z}");
        }
    }

    #[test]
    fn zero_roots_and_constants() {
        let set = solve_coeffs(&big(&[0, 0, -1, 1]), &SolveOptions::default()).unwrap();
        assert_eq!(set.degree, 3);
        assert_eq!(set.roots.iter().filter(|z| z.is_zero()).count(), 2);
        assert!(matches!(
            solve_coeffs(&big(&[5]), &SolveOptions::default()),
            Err(Error::ConstantPolynomial)
        ));
    }

    #[test]
    fn extended_precision_agrees() {
        let c = big(&[2, -3, 0, 5, 1, 7]);
        let a = solve_coeffs(&c, &SolveOptions::default()).unwrap();
        let b = solve_coeffs(
            &c,
            &SolveOptions {
                force_extended: true,
                ..SolveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(b.precision_bits, 128);
        assert!(b.residual_scale <= 1e-10);
        for z in &a.roots {
            assert!(b.roots.iter().any(|w| (z - w).norm() < 1e-8));
        }
    }

    #[test]
    fn huge_coefficients_go_extended() {
        let unit = BigInt::from(1) << 1500u32;
        let c = vec![unit.clone(), &unit * 3, unit];
        let set = solve_coeffs(&c, &SolveOptions::default()).unwrap();
        assert!(set.precision_bits > 53);
        assert_eq!(set.roots.len(), 2);
    }

    #[test]
    fn vieta() {
        let c = big(&[6, -5, 1]);
        let set = solve_coeffs(&c, &SolveOptions::default()).unwrap();
        assert!(vieta_check(&c, &set).within(1e-9));
    }

    #[test]
    fn deterministic() {
        let c = big(&[3, 1, 4, 1, 5, 9, 2, 6]);
        let a = solve_coeffs(&c, &SolveOptions::default()).unwrap();
        let b = solve_coeffs(&c, &SolveOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
