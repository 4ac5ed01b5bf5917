use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_divisibility_of, cyclotomic, exact_quotient, DivisibilityReport};
use crate::error::{Error, Result};
use crate::genfun::{expand, stanton_modified, stanton_modified_rows, StantonKind, Statistic};
use crate::laurent::LaurentPoly;

/// One row's value at `w = 1` and its residue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub n: u32,
    pub value: String,
    pub residue: u32,
}

/// Values at `w = 1` along `n = residue (mod l)`, `n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSweep {
    pub family: String,
    pub modulus: u32,
    pub residue: u32,
    pub n_max: u32,
    pub entries: Vec<SweepEntry>,
    pub all_zero: bool,
}

impl CongruenceSweep {
    pub fn first_nonzero(&self) -> Option<&SweepEntry> {
        self.entries.iter().find(|e| e.residue != 0)
    }
}

/// Sweep over precomputed rows (`rows[n]` is row `n`).
pub fn congruence_sweep_rows(
    family: &str,
    rows: &[LaurentPoly],
    l: u32,
    residue: u32,
    n_max: u32,
) -> CongruenceSweep {
    assert!(l >= 1, "modulus must be positive");
    let entries: Vec<SweepEntry> = (residue % l..=n_max)
        .step_by(l as usize)
        .map(|n| {
            let v = rows[n as usize].eval_at_one();
            let r = v.mod_floor(&BigInt::from(l));
            SweepEntry {
                n,
                value: v.to_string(),
                residue: u32::try_from(&r).unwrap(),
            }
        })
        .collect();
    let all_zero = entries.iter().all(|e| e.residue == 0);
    CongruenceSweep {
        family: family.to_string(),
        modulus: l,
        residue: residue % l,
        n_max,
        entries,
        all_zero,
    }
}

pub fn congruence_sweep(
    family: Statistic,
    l: u32,
    residue: u32,
    n_max: u32,
) -> Result<CongruenceSweep> {
    let rows = expand(family, n_max as usize)?;
    Ok(congruence_sweep_rows(
        &family.to_string(),
        &rows,
        l,
        residue,
        n_max,
    ))
}

/// Checks `Phi_l | row n` for every `n = residue (mod l)` with
/// `n_min <= n <= n_max`. With `require_nonnegative`, the quotient must also
/// have non-negative coefficients. The first failure is returned as
/// [`Error::CertificateFailed`].
pub fn certify_progression(
    family: &str,
    rows: &[LaurentPoly],
    l: u32,
    residue: u32,
    n_min: u32,
    n_max: u32,
    require_nonnegative: bool,
) -> Result<Vec<DivisibilityReport>> {
    let ns: Vec<u32> = (n_min..=n_max).filter(|n| n % l == residue % l).collect();
    let reports: Vec<DivisibilityReport> = ns
        .par_iter()
        .map(|&n| check_divisibility_of(family, Some(n as i64), &rows[n as usize], l))
        .collect::<Result<_>>()?;
    for r in &reports {
        let fail = if !r.divisible {
            Some("not divisible".to_string())
        } else if require_nonnegative && r.quotient_nonnegative != Some(true) {
            Some("quotient has a negative coefficient".to_string())
        } else {
            None
        };
        if let Some(detail) = fail {
            return Err(Error::CertificateFailed {
                family: family.to_string(),
                n: r.n.unwrap_or_default(),
                modulus: l,
                detail,
            });
        }
    }
    Ok(reports)
}

/// Divisor tested by [`search_progressions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Divisor {
    /// `Phi_l(w)` for the progression modulus `l`.
    Cyclotomic,
    /// `Phi_2(w^2) = w^2 + 1`.
    PhiTwoOfWSquared,
}

impl Divisor {
    pub fn poly(self, l: u32) -> LaurentPoly {
        match self {
            Divisor::Cyclotomic => cyclotomic(l),
            Divisor::PhiTwoOfWSquared => LaurentPoly::from_terms([(0, 1), (2, 1)]),
        }
    }
}

impl std::str::FromStr for Divisor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclotomic" | "phi" => Ok(Divisor::Cyclotomic),
            "phi2-w2" | "w2+1" => Ok(Divisor::PhiTwoOfWSquared),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// Result for one residue class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueOutcome {
    pub residue: u32,
    pub tested: u32,
    /// Smallest `n` in the class where the divisor fails.
    pub first_failure: Option<u32>,
}

/// Empirical scan: which classes mod `l` have every tested row divisible.
/// Nothing beyond the tested range is claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgressionSearch {
    pub family: String,
    pub modulus: u32,
    pub divisor: String,
    pub n_min: u32,
    pub n_max: u32,
    pub holding: Vec<u32>,
    pub outcomes: Vec<ResidueOutcome>,
}

pub fn search_progressions_rows(
    family: &str,
    rows: &[LaurentPoly],
    l: u32,
    divisor: Divisor,
    n_max: u32,
) -> Result<ProgressionSearch> {
    if l == 0 || n_max < l {
        return Err(Error::OutOfScope {
            what: format!("progression search mod {l} up to {n_max}"),
            why: "every residue class needs a representative".into(),
        });
    }
    let g = divisor.poly(l);
    let n_min = 1;
    let fails: Vec<bool> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| exact_quotient(&rows[n as usize], &g).map(|q| q.is_none()))
        .collect::<Result<_>>()?;
    let outcomes: Vec<ResidueOutcome> = (0..l)
        .map(|r| {
            let class: Vec<u32> = (n_min..=n_max).filter(|n| n % l == r).collect();
            ResidueOutcome {
                residue: r,
                tested: class.len() as u32,
                first_failure: class
                    .into_iter()
                    .find(|&n| fails[(n - n_min) as usize]),
            }
        })
        .collect();
    Ok(ProgressionSearch {
        family: family.to_string(),
        modulus: l,
        divisor: g.to_string(),
        n_min,
        n_max,
        holding: outcomes
            .iter()
            .filter(|o| o.first_failure.is_none())
            .map(|o| o.residue)
            .collect(),
        outcomes,
    })
}

pub fn search_progressions(
    family: Statistic,
    l: u32,
    divisor: Divisor,
    n_max: u32,
) -> Result<ProgressionSearch> {
    let rows = expand(family, n_max as usize)?;
    search_progressions_rows(&family.to_string(), &rows, l, divisor, n_max)
}

fn stanton_family(kind: StantonKind) -> &'static str {
    match kind {
        StantonKind::Rank => "rank*",
        StantonKind::Crank => "crank*",
    }
}

/// Reports for the modified polynomials `n = 0..=n_max`, each required to be
/// divisible by `Phi_l` with a non-negative quotient.
pub fn check_stanton_range(
    kind: StantonKind,
    l: u32,
    n_max: u32,
) -> Result<Vec<DivisibilityReport>> {
    let rows = stanton_modified_rows(kind, l, n_max)?;
    let family = stanton_family(kind);
    let mut out = Vec::with_capacity(rows.len());
    for (n, f) in rows.iter().enumerate() {
        let r = check_divisibility_of(family, Some(n as i64), f, l)?;
        if !r.divisible || r.quotient_nonnegative != Some(true) {
            return Err(Error::CertificateFailed {
                family: family.to_string(),
                n: n as i64,
                modulus: l,
                detail: if r.divisible {
                    "quotient has a negative coefficient".into()
                } else {
                    "not divisible".into()
                },
            });
        }
        out.push(r);
    }
    Ok(out)
}

/// Report on one modified polynomial; divisibility and non-negativity are
/// not enforced here, see [`check_stanton_range`].
pub fn check_stanton(kind: StantonKind, l: u32, n: u32) -> Result<DivisibilityReport> {
    let f = stanton_modified(kind, l, n)?;
    check_divisibility_of(stanton_family(kind), Some(n as i64), &f, l)
}
