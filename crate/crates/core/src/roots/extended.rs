//! The same iteration over binary floats with a configurable significand.

use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

use super::solve::{RootSet, SolveOptions};
use crate::error::{Error, Result};

type F = FBig<HalfEven, 2>;

#[derive(Clone)]
struct C {
    re: F,
    im: F,
}

struct Ctx {
    bits: usize,
}

impl Ctx {
    fn float(&self, x: f64) -> F {
        F::try_from(x)
            .expect("finite input")
            .with_precision(self.bits)
            .value()
    }

    fn int(&self, x: &BigInt) -> F {
        let i = IBig::from_str(&x.to_string()).expect("decimal integer");
        F::from(i).with_precision(self.bits).value()
    }

    fn c(&self, z: Complex64) -> C {
        C {
            re: self.float(z.re),
            im: self.float(z.im),
        }
    }

    fn zero(&self) -> C {
        self.c(Complex64::new(0.0, 0.0))
    }
}

fn to_f64(x: &F) -> f64 {
    x.to_f64().value()
}

impl C {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    fn add(&self, o: &C) -> C {
        C {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &C) -> C {
        C {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &C) -> C {
        C {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn add_real(&self, x: &F) -> C {
        C {
            re: &self.re + x,
            im: self.im.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }

    fn norm_sqr(&self) -> F {
        &self.re * &self.re + &self.im * &self.im
    }

    fn div(&self, o: &C) -> C {
        let den = o.norm_sqr();
        C {
            re: (&self.re * &o.re + &self.im * &o.im) / &den,
            im: (&self.im * &o.re - &self.re * &o.im) / &den,
        }
    }

    fn inv(&self, ctx: &Ctx) -> C {
        let den = self.norm_sqr();
        C {
            re: &self.re / &den,
            im: -(&self.im / &den),
        }
        .with(ctx)
    }

    fn with(self, ctx: &Ctx) -> C {
        C {
            re: self.re.with_precision(ctx.bits).value(),
            im: self.im.with_precision(ctx.bits).value(),
        }
    }
}

/// `(f/f', backward error)` at `z`, reversing the polynomial when `|z| > 1`.
fn newton_and_error(ctx: &Ctx, a: &[F], abs_a: &[F], z: &C) -> (C, f64) {
    let d = a.len() - 1;
    let one = ctx.float(1.0);
    let outside = z.norm_sqr() > one;
    let x = if outside { z.inv(ctx) } else { z.clone() };
    let r = ctx.float(x.to_c64().norm());
    let order: Vec<usize> = if outside {
        (0..=d).collect()
    } else {
        (0..=d).rev().collect()
    };
    let mut p = ctx.zero();
    let mut dp = ctx.zero();
    let mut s = ctx.float(0.0);
    for k in order {
        dp = dp.mul(&x).add(&p);
        p = p.mul(&x).add_real(&a[k]);
        s = &s * &r + &abs_a[k];
    }
    if p.is_zero() {
        return (ctx.zero(), 0.0);
    }
    let err = (to_f64(&p.norm_sqr()) / to_f64(&(&s * &s))).sqrt();
    let err = if err.is_finite() {
        err
    } else {
        // Fall back to the ratio computed in extended precision.
        to_f64(&(p.norm_sqr() / (&s * &s))).sqrt()
    };
    let ratio = if !outside && dp.is_zero() {
        // A critical point; step by the residual itself.
        p.clone()
    } else if outside {
        // z / (d - y g'(y)/g(y))
        let dd = C {
            re: ctx.float(d as f64),
            im: ctx.float(0.0),
        };
        z.div(&dd.sub(&x.mul(&dp).div(&p)))
    } else {
        p.div(&dp)
    };
    (ratio, err)
}

fn run(coeffs: &[BigInt], seeds: &[Complex64], opts: &SolveOptions, bits: usize) -> Result<RootSet> {
    let ctx = Ctx { bits };
    let a: Vec<F> = coeffs.iter().map(|c| ctx.int(c)).collect();
    let abs_a: Vec<F> = coeffs.iter().map(|c| ctx.int(&c.abs())).collect();
    let d = seeds.len();
    let mut z: Vec<C> = seeds.iter().map(|&s| ctx.c(s)).collect();
    let mut done = vec![false; d];
    let eps = 2f64.powi(8 - bits as i32);
    let one = C {
        re: ctx.float(1.0),
        im: ctx.float(0.0),
    };
    for iter in 1..=opts.max_iterations {
        let mut all_done = true;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (ratio, _) = newton_and_error(&ctx, &a, &abs_a, &z[i]);
            let mut sum = ctx.zero();
            for (j, zj) in z.iter().enumerate() {
                let diff = z[i].sub(zj);
                if j != i && !diff.is_zero() {
                    sum = sum.add(&diff.inv(&ctx));
                }
            }
            let w = ratio.div(&one.sub(&ratio.mul(&sum))).with(&ctx);
            z[i] = z[i].sub(&w).with(&ctx);
            let wn = to_f64(&w.norm_sqr()).sqrt();
            let zn = to_f64(&z[i].norm_sqr()).sqrt();
            if !wn.is_finite() || wn > eps * zn {
                all_done = false;
            } else {
                done[i] = true;
            }
        }
        if all_done {
            return finish(&ctx, &a, &abs_a, &z, opts, iter);
        }
    }
    finish(&ctx, &a, &abs_a, &z, opts, opts.max_iterations)
}

/// Rounds the roots to `f64` and measures their backward error in extended
/// precision.
fn finish(ctx: &Ctx, a: &[F], abs_a: &[F], z: &[C], opts: &SolveOptions, iter: u32) -> Result<RootSet> {
    let roots: Vec<Complex64> = z.iter().map(C::to_c64).collect();
    let mut worst: f64 = 0.0;
    for r in &roots {
        if !r.re.is_finite() || !r.im.is_finite() {
            return Err(Error::NoConvergence {
                iterations: iter,
                worst_residual: f64::INFINITY,
            });
        }
        worst = worst.max(newton_and_error(ctx, a, abs_a, &ctx.c(*r)).1);
    }
    if worst <= opts.tolerance {
        Ok(RootSet {
            roots,
            residual_scale: worst,
            degree: z.len(),
            precision_bits: ctx.bits,
            iterations: iter,
        })
    } else {
        Err(Error::NoConvergence {
            iterations: iter,
            worst_residual: worst,
        })
    }
}

/// Extended-precision stage, doubling the significand once more if needed.
pub(crate) fn aberth_extended(
    coeffs: &[BigInt],
    seeds: Vec<Complex64>,
    opts: &SolveOptions,
) -> Result<RootSet> {
    match run(coeffs, &seeds, opts, opts.extended_bits) {
        Err(Error::NoConvergence { .. }) => run(coeffs, &seeds, opts, 2 * opts.extended_bits),
        other => other,
    }
}
