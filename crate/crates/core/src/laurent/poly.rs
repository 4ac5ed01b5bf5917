use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact Laurent polynomial in `w` with arbitrary-precision integer coefficients.
///
/// Stored densely over its exponent window `[min_exp, max_exp]`. The window is
/// always tight: the coefficients at both ends are nonzero, and the zero
/// polynomial is the empty window anchored at exponent 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * w^exp`.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// Builds `sum_k coeffs[k] * w^(min_exp + k)`, trimming zero ends.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.min_exp = 0;
            }
            Some(first) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if first > 0 {
                    self.coeffs.drain(..first);
                    self.min_exp += first as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Largest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn max_exp(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.min_exp + self.coeffs.len() as i64 - 1
        }
    }

    /// Dense coefficients over `[min_exp, max_exp]`, zeros included.
    pub fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeff_ref(exp).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, exp: i64) -> Option<&BigInt> {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.min_exp + k as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Value at `w = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes `w -> 1/w`.
    pub fn reverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            min_exp: -self.max_exp(),
            coeffs,
        }
    }

    /// Multiplies by `w^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Returns `(coefficient, exponent)` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.min_exp))
    }

    /// True when the polynomial is `±w^k`, the units of `Z[w, 1/w]`.
    pub fn is_unit(&self) -> bool {
        matches!(self.as_monomial(), Some((c, _)) if c.abs().is_one())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// In-place `self += c * w^shift * other`.
    pub(crate) fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: i64, shift: i64) {
        if other.is_zero() || c == 0 {
            return;
        }
        let lo = other.min_exp + shift;
        let hi = other.max_exp() + shift;
        if self.is_zero() {
            self.min_exp = lo;
            self.coeffs = vec![BigInt::zero(); other.coeffs.len()];
        } else {
            if lo < self.min_exp {
                let pad = (self.min_exp - lo) as usize;
                let mut grown = vec![BigInt::zero(); pad + self.coeffs.len()];
                for (dst, src) in grown[pad..].iter_mut().zip(self.coeffs.drain(..)) {
                    *dst = src;
                }
                self.coeffs = grown;
                self.min_exp = lo;
            }
            let top = self.max_exp();
            if hi > top {
                let new_len = (hi - self.min_exp + 1) as usize;
                self.coeffs.resize(new_len, BigInt::zero());
            }
        }
        let offset = (lo - self.min_exp) as usize;
        let dst = &mut self.coeffs[offset..offset + other.coeffs.len()];
        match c {
            1 => dst.iter_mut().zip(&other.coeffs).for_each(|(d, s)| *d += s),
            -1 => dst.iter_mut().zip(&other.coeffs).for_each(|(d, s)| *d -= s),
            _ => dst
                .iter_mut()
                .zip(&other.coeffs)
                .for_each(|(d, s)| *d += s * c),
        }
        self.trim();
    }

    /// Exact division `self / divisor` in `Z[w, 1/w]`.
    ///
    /// Both sides are shifted to ordinary polynomials with nonzero constant
    /// term (powers of `w` are units), divided over the rationals, and the
    /// quotient is certified integral. A nonzero remainder is returned inside
    /// [`Error::NotDivisible`], cleared of denominators when the divisor is
    /// not monic.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = &self.coeffs;
        let den = &divisor.coeffs;
        let shift = self.min_exp - divisor.min_exp;
        if num.len() < den.len() {
            return Err(Error::NotDivisible {
                remainder: self.clone(),
            });
        }
        let lead = den.last().unwrap();
        if lead.abs().is_one() {
            let (q, r) = long_division_unit_lead(num, den);
            if r.iter().any(|c| !c.is_zero()) {
                return Err(Error::NotDivisible {
                    remainder: Self::from_coeffs(self.min_exp, r),
                });
            }
            return Ok(Self::from_coeffs(shift, q));
        }
        let (q, r) = long_division_rational(num, den);
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible {
                remainder: Self::from_coeffs(self.min_exp, clear_denominators(&r)),
            });
        }
        if q.iter().any(|c| !c.is_integer()) {
            return Err(Error::NonIntegralQuotient);
        }
        Ok(Self::from_coeffs(
            shift,
            q.into_iter().map(|c| c.to_integer()).collect(),
        ))
    }

    /// Evaluates at a real point in floating point (diagnostics only).
    pub fn eval_f64(&self, w: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * w.powi(e as i32))
            .sum()
    }
}

fn long_division_unit_lead(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut quot = vec![BigInt::zero(); num.len() - dl + 1];
    let lead_is_one = den[dl - 1].is_one();
    for k in (0..quot.len()).rev() {
        let top = &rem[k + dl - 1];
        if top.is_zero() {
            continue;
        }
        let q = if lead_is_one { top.clone() } else { -top };
        for (j, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[k + j] -= &q * d;
            }
        }
        quot[k] = q;
    }
    rem.truncate(dl - 1);
    (quot, rem)
}

fn long_division_rational(num: &[BigInt], den: &[BigInt]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = num.iter().cloned().map(BigRational::from_integer).collect();
    let den: Vec<BigRational> = den.iter().cloned().map(BigRational::from_integer).collect();
    let dl = den.len();
    let lead = den[dl - 1].clone();
    let mut quot = vec![BigRational::zero(); num.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        if rem[k + dl - 1].is_zero() {
            continue;
        }
        let q = &rem[k + dl - 1] / &lead;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &q * d;
        }
        quot[k] = q;
    }
    rem.truncate(dl - 1);
    (quot, rem)
}

fn clear_denominators(r: &[BigRational]) -> Vec<BigInt> {
    let l = r
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    r.iter()
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect()
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        self.coeffs.iter_mut().for_each(|c| *c = -std::mem::take(c));
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, 1, 0);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled_shifted(rhs, -1, 0);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, out)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    match e {
                        1 => write!(f, "w")?,
                        _ => write!(f, "w^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Wire form: `{"min_exp": -2, "coeffs": ["1", "0", "3"]}` with exact decimal strings.
#[derive(Serialize, Deserialize)]
struct WireLaurent {
    min_exp: i64,
    coeffs: Vec<String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireLaurent {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireLaurent::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_coeffs(wire.min_exp, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn addition_recanonicalizes() {
        let f = lp(&[(1, 1), (0, 1)]);
        let g = LaurentPoly::constant(-1);
        let s = &f + &g;
        assert_eq!(s, LaurentPoly::monomial(1, 1));
        assert_eq!(s.min_exp(), 1);
        assert_eq!(s.max_exp(), 1);

        assert_eq!(&LaurentPoly::zero() + &f, f);

        let h = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(&h + &h, lp(&[(-1, 2), (1, 2)]));
    }

    #[test]
    fn full_cancellation_gives_canonical_zero() {
        let f = lp(&[(-3, 2), (5, -1)]);
        let z = &f - &f;
        assert!(z.is_zero());
        assert_eq!(z.min_exp(), 0);
        assert_eq!(z.max_exp(), 0);
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn multiplication() {
        assert_eq!(lp(&[(0, 1), (1, 1)]) * lp(&[(0, 1), (1, -1)]), lp(&[(0, 1), (2, -1)]));
        assert_eq!(lp(&[(1, 1), (0, 1)]) * lp(&[(1, 1), (0, -1)]), lp(&[(2, 1), (0, -1)]));
        let t = lp(&[(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(&t * &t, lp(&[(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)]));
    }

    #[test]
    fn eval_and_reverse() {
        let phi5 = lp(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(phi5.eval_at_one(), BigInt::from(5));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(lp(&[(2, 1), (0, 3)]).reverse(), lp(&[(-2, 1), (0, 3)]));
        let sym = lp(&[(-2, 4), (0, 1), (2, 4)]);
        assert_eq!(sym.reverse(), sym);
    }

    #[test]
    fn exact_division() {
        let q = lp(&[(2, 1), (0, -1)]).divide_exact(&lp(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(q, lp(&[(1, 1), (0, 1)]));

        let phi5 = lp(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        let q = lp(&[(5, 1), (0, -1)]).divide_exact(&phi5).unwrap();
        assert_eq!(q, lp(&[(1, 1), (0, -1)]));

        match lp(&[(2, 1), (0, 1)]).divide_exact(&lp(&[(1, 1), (0, 1)])) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, LaurentPoly::constant(2)),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
    }

    #[test]
    fn division_handles_laurent_windows_and_non_monic_divisors() {
        let g = lp(&[(-1, 2), (0, 3)]);
        let q = lp(&[(-4, 1), (1, -7), (2, 1)]);
        assert_eq!((&q * &g).divide_exact(&g).unwrap(), q);

        // 2w + 2 over 2w + 4 leaves a remainder; over 2 it is exact.
        assert!(matches!(
            lp(&[(1, 2), (0, 2)]).divide_exact(&lp(&[(1, 2), (0, 4)])),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(
            lp(&[(1, 2), (0, 2)]).divide_exact(&LaurentPoly::constant(2)).unwrap(),
            lp(&[(1, 1), (0, 1)])
        );
        assert!(matches!(
            lp(&[(1, 1), (0, 1)]).divide_exact(&LaurentPoly::constant(2)),
            Err(Error::NonIntegralQuotient)
        ));
        assert!(matches!(
            lp(&[(0, 1)]).divide_exact(&LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(-1, 1), (0, -2), (2, 3)]).to_string(), "w^-1 - 2 + 3*w^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(&[(1, -1)]).to_string(), "-w");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let f = LaurentPoly::from_coeffs(-1, vec![BigInt::from(1), BigInt::zero(), "123456789012345678901234567890".parse().unwrap()]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"min_exp":-1,"coeffs":["1","0","123456789012345678901234567890"]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
