use num_bigint::BigInt;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// A monomial `coeff * w^exp`, the `a` in a binomial factor `1 - a q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub exp: i64,
}

impl Monomial {
    pub const fn new(coeff: i64, exp: i64) -> Self {
        Self { coeff, exp }
    }

    /// `w^exp`.
    pub const fn w(exp: i64) -> Self {
        Self { coeff: 1, exp }
    }

    pub const fn constant(coeff: i64) -> Self {
        Self { coeff, exp: 0 }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(self.coeff, self.exp)
    }
}

/// Truncated power series in `q` whose coefficients are Laurent polynomials
/// in `w`: `terms[n]` is the coefficient of `q^n` for `n <= truncation`.
///
/// Everything above the truncation is unknown, never zero. Binary operations
/// work at the smaller of the two truncations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeriesTable {
    terms: Vec<LaurentPoly>,
}

impl QSeriesTable {
    pub fn zero(truncation: usize) -> Self {
        Self {
            terms: vec![LaurentPoly::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.terms[0] = LaurentPoly::one();
        s
    }

    /// Series known exactly through `q^(terms.len() - 1)`.
    pub fn from_terms(terms: Vec<LaurentPoly>) -> Self {
        assert!(!terms.is_empty(), "a series needs at least the q^0 term");
        Self { terms }
    }

    pub fn truncation(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[LaurentPoly] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<LaurentPoly> {
        self.terms
    }

    /// Drops knowledge above `q^truncation` (no-op if already coarser).
    pub fn truncate(&mut self, truncation: usize) {
        self.terms.truncate(truncation + 1);
    }

    /// Values of every coefficient at `w = 1`.
    pub fn eval_at_one(&self) -> Vec<BigInt> {
        self.terms.iter().map(LaurentPoly::eval_at_one).collect()
    }

    /// Cauchy product at the smaller truncation.
    pub fn mul(&self, other: &QSeriesTable) -> QSeriesTable {
        let t = self.truncation().min(other.truncation());
        let mut out = QSeriesTable::zero(t);
        for (i, a) in self.terms.iter().take(t + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.terms.iter().take(t + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.terms[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse. The `q^0` coefficient must be a unit `±w^k`.
    pub fn invert(&self) -> Result<QSeriesTable> {
        let c0 = &self.terms[0];
        if !c0.is_unit() {
            return Err(Error::NotAUnit {
                constant: c0.clone(),
            });
        }
        let (sign, k) = c0.as_monomial().unwrap();
        let inv0 = LaurentPoly::monomial(sign.clone(), -k);
        let t = self.truncation();
        let mut out = QSeriesTable::zero(t);
        out.terms[0] = inv0.clone();
        for n in 1..=t {
            let mut acc = LaurentPoly::zero();
            for j in 1..=n {
                let a = &self.terms[j];
                if !a.is_zero() && !out.terms[n - j].is_zero() {
                    acc += &(a * &out.terms[n - j]);
                }
            }
            out.terms[n] = -(&acc * &inv0);
        }
        Ok(out)
    }

    /// In-place sum at the smaller truncation.
    pub fn add_assign(&mut self, other: &QSeriesTable) {
        let t = self.truncation().min(other.truncation());
        self.truncate(t);
        for (a, b) in self.terms.iter_mut().zip(&other.terms) {
            *a += b;
        }
    }

    /// Adds `q^k * other` without changing this series' truncation.
    pub fn add_shifted(&mut self, other: &QSeriesTable, k: usize) {
        assert!(
            other.truncation() + k >= self.truncation() || k > self.truncation(),
            "shifted operand is not known through q^{}",
            self.truncation()
        );
        for n in k..self.terms.len() {
            self.terms[n] += &other.terms[n - k];
        }
    }

    /// Multiplies by `q^k`; terms pushed past the truncation are dropped.
    pub fn shift_q(&self, k: usize) -> QSeriesTable {
        let t = self.truncation();
        let mut out = QSeriesTable::zero(t);
        for n in k..=t {
            out.terms[n] = self.terms[n - k].clone();
        }
        out
    }

    /// In-place multiplication by the binomial factor `1 - a q^k`.
    pub fn mul_factor(&mut self, a: Monomial, k: usize) {
        if a.coeff == 0 {
            return;
        }
        if k == 0 {
            let f = &LaurentPoly::one() - &a.to_poly();
            for c in &mut self.terms {
                *c = &*c * &f;
            }
            return;
        }
        for n in (k..self.terms.len()).rev() {
            let (lo, hi) = self.terms.split_at_mut(n);
            hi[0].add_scaled_shifted(&lo[n - k], -a.coeff, a.exp);
        }
    }

    /// In-place division by `1 - a q^k`, i.e. multiplication by the
    /// geometric series `sum_j a^j q^(jk)`.
    pub fn div_factor(&mut self, a: Monomial, k: usize) -> Result<()> {
        if a.coeff == 0 {
            return Ok(());
        }
        if k == 0 {
            let f = &LaurentPoly::one() - &a.to_poly();
            if !f.is_unit() {
                return Err(Error::NotAUnit { constant: f });
            }
            let (sign, e) = f.as_monomial().unwrap();
            let inv = LaurentPoly::monomial(sign.clone(), -e);
            for c in &mut self.terms {
                *c = &*c * &inv;
            }
            return Ok(());
        }
        for n in k..self.terms.len() {
            let (lo, hi) = self.terms.split_at_mut(n);
            hi[0].add_scaled_shifted(&lo[n - k], a.coeff, a.exp);
        }
        Ok(())
    }

    /// Truncated `q`-Pochhammer product `prod_{j} (1 - a q^(start + j))`
    /// over `n_factors` factors, or over all `j >= 0` when `n_factors` is `None`.
    pub fn pochhammer(
        a: &LaurentPoly,
        start_power: usize,
        n_factors: Option<usize>,
        truncation: usize,
    ) -> Result<QSeriesTable> {
        let mut out = QSeriesTable::one(truncation);
        if n_factors == Some(0) {
            return Ok(out);
        }
        let (c, e) = a
            .as_monomial()
            .ok_or_else(|| Error::NotAMonomial(a.clone()))?;
        let c: i64 = c
            .try_into()
            .map_err(|_| Error::NotAMonomial(a.clone()))?;
        let mono = Monomial::new(c, e);
        match n_factors {
            Some(n) => {
                for j in 0..n {
                    let k = start_power + j;
                    if k > truncation {
                        break;
                    }
                    out.mul_factor(mono, k);
                }
            }
            None => {
                if start_power == 0 {
                    return Err(Error::DivergentProduct);
                }
                for k in start_power..=truncation {
                    out.mul_factor(mono, k);
                }
            }
        }
        Ok(out)
    }

    /// True if every coefficient is the constant 1 at `q^0` and 0 elsewhere.
    pub fn is_one(&self) -> bool {
        self.terms[0] == LaurentPoly::one() && self.terms[1..].iter().all(LaurentPoly::is_zero)
    }
}

/// Convenience: the series `sum_n values[n] q^n` with constant coefficients.
pub fn constant_series(values: &[i64]) -> QSeriesTable {
    QSeriesTable::from_terms(values.iter().map(|&v| LaurentPoly::constant(v)).collect())
}
