use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{expand, Statistic};
use crate::laurent::LaurentPoly;

/// A one-variable polynomial `sum_k coeffs[k] w^(k + w_power)` with
/// `coeffs[0]` and `coeffs[d]` nonzero.
///
/// For the symmetric families Rank, Crank, SptCrank and UnimodalRank the
/// polynomial is `2 S_n(w)` with `S_n(w) = s(0,n)/2 + sum_{m>=1} s(m,n) w^m`,
/// kept integral by doubling. Other families use the non-negative part of the
/// row as is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalPoly {
    pub family: Statistic,
    pub n: u32,
    #[serde(with = "crate::cyclo::serde_decimal_vec")]
    pub coeffs: Vec<BigInt>,
    pub doubled: bool,
    /// Power of `w` factored out so that `coeffs[0] != 0`. Zero except for
    /// the parts-count polynomials, which have no constant term.
    pub w_power: i64,
}

/// Families stored as `2 S_n`.
pub fn is_doubled_family(family: Statistic) -> bool {
    matches!(
        family,
        Statistic::Rank | Statistic::Crank | Statistic::SptCrank | Statistic::UnimodalRank
    )
}

impl PrincipalPoly {
    /// Plain polynomial with the given coefficients, lowest degree first.
    pub fn from_coeffs(family: Statistic, n: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.first().map_or(true, Zero::is_zero) {
            return Err(Error::ZeroConstantTerm {
                family: family.to_string(),
                n,
            });
        }
        Ok(Self {
            family,
            n,
            coeffs,
            doubled: false,
            w_power: 0,
        })
    }

    /// Builds the principal polynomial from the full Laurent row.
    pub fn from_row(family: Statistic, n: u32, row: &LaurentPoly) -> Result<Self> {
        if family == Statistic::PartsCount {
            return Self::from_one_sided(family, n, row);
        }
        let s0 = row.coeff(0);
        if s0.is_zero() {
            return Err(Error::ZeroConstantTerm {
                family: family.to_string(),
                n,
            });
        }
        let top = row.max_exp().max(0);
        let doubled = is_doubled_family(family);
        let coeffs = (0..=top)
            .map(|m| {
                let c = row.coeff(m);
                if doubled && m > 0 {
                    c * 2
                } else {
                    c
                }
            })
            .collect();
        let mut p = Self::from_coeffs(family, n, coeffs)?;
        p.doubled = doubled;
        Ok(p)
    }

    /// A row supported on `m >= 0`, with any power of `w` dividing it pulled
    /// out into `w_power`.
    pub fn from_one_sided(family: Statistic, n: u32, row: &LaurentPoly) -> Result<Self> {
        if row.is_zero() || row.min_exp() < 0 {
            return Err(Error::ZeroConstantTerm {
                family: family.to_string(),
                n,
            });
        }
        let mut p = Self::from_coeffs(family, n, row.dense().to_vec())?;
        p.w_power = row.min_exp();
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn as_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.w_power, self.coeffs.clone())
    }

    /// `p(w) + p(w^-1)`. For a doubled polynomial the constant term is
    /// `s(0,n)` counted twice, so this is exactly twice the full row.
    pub fn symmetrized(&self) -> LaurentPoly {
        let p = self.as_laurent();
        &p + &p.reverse()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }
}

/// The principal polynomial of `family` at `n`.
pub fn principal_poly(family: Statistic, n: u32) -> Result<PrincipalPoly> {
    let rows = expand(family, n as usize)?;
    PrincipalPoly::from_row(family, n, &rows[n as usize])
}

/// Principal polynomials at several `n` from a single expansion.
pub fn principal_polys(family: Statistic, ns: &[u32]) -> Result<Vec<PrincipalPoly>> {
    let top = ns.iter().copied().max().unwrap_or(0);
    let rows = expand(family, top as usize)?;
    ns.iter()
        .map(|&n| PrincipalPoly::from_row(family, n, &rows[n as usize]))
        .collect()
}
