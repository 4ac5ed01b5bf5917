//! Cyclotomic divisibility through bucket sums, with both directions of the
//! equidistribution criterion computed independently and cross-checked.

mod sweep;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub use sweep::{
    certify_progression, check_stanton, check_stanton_range, congruence_sweep,
    congruence_sweep_rows, search_progressions, search_progressions_rows, CongruenceSweep,
    Divisor, ProgressionSearch, ResidueOutcome, SweepEntry,
};

/// `Phi_l(w)`, from `w^l - 1` divided by the cyclotomic factors of the
/// proper divisors of `l`.
pub fn cyclotomic(l: u32) -> LaurentPoly {
    assert!(l >= 1, "cyclotomic index must be positive");
    let mut f = LaurentPoly::from_terms([(0, -1), (l as i64, 1)]);
    for d in 1..l {
        if l % d == 0 {
            f = f
                .divide_exact(&cyclotomic(d))
                .expect("w^l - 1 is divisible by Phi_d for d | l");
        }
    }
    f
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `b[r] = sum of the coefficients of w^j over j = r (mod l)`.
pub fn bucket_sums(f: &LaurentPoly, l: u32) -> Vec<BigInt> {
    assert!(l >= 1, "bucket modulus must be positive");
    let mut b = vec![BigInt::zero(); l as usize];
    for (e, c) in f.terms() {
        b[e.mod_floor(&(l as i64)) as usize] += c;
    }
    b
}

/// `f(w^-1) = f(w)`.
pub fn check_symmetric(f: &LaurentPoly) -> bool {
    f.reverse() == *f
}

/// Coefficients over the full window, interior zeros included, weakly rise
/// to a peak and then weakly fall.
pub fn check_unimodal(f: &LaurentPoly) -> bool {
    let c = f.dense();
    let mut i = 1;
    while i < c.len() && c[i] >= c[i - 1] {
        i += 1;
    }
    while i < c.len() && c[i] <= c[i - 1] {
        i += 1;
    }
    i >= c.len()
}

/// Unimodal with no two neighbouring coefficients equal.
pub fn check_strictly_unimodal(f: &LaurentPoly) -> bool {
    let c = f.dense();
    c.windows(2).all(|w| w[0] != w[1]) && check_unimodal(f)
}

/// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
pub fn exact_quotient(f: &LaurentPoly, g: &LaurentPoly) -> Result<Option<LaurentPoly>> {
    match f.divide_exact(g) {
        Ok(q) => Ok(Some(q)),
        Err(Error::NotDivisible { .. }) | Err(Error::NonIntegralQuotient) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Serde adapter writing `Vec<BigInt>` as decimal strings.
pub mod serde_decimal_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Everything learned about `Phi_l` dividing one polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    pub family: String,
    pub modulus: u32,
    pub n: Option<i64>,
    #[serde(with = "serde_decimal_vec")]
    pub buckets: Vec<BigInt>,
    pub divisible: bool,
    pub quotient: Option<LaurentPoly>,
    pub quotient_nonnegative: Option<bool>,
    pub symmetric: bool,
    pub unimodal: bool,
}

/// [`check_divisibility_of`] without a family label.
pub fn check_divisibility(f: &LaurentPoly, l: u32) -> Result<DivisibilityReport> {
    check_divisibility_of("", None, f, l)
}

/// Decides whether `Phi_l` divides `f` for prime `l`, once by comparing
/// bucket sums and once by exact division, and fails with
/// [`Error::InternalInconsistency`] if the two disagree. A symmetric unimodal
/// `f` with non-negative coefficients divisible by `Phi_l` for odd `l` must
/// have a non-negative quotient;
/// otherwise [`Error::PositivityViolation`] is returned.
pub fn check_divisibility_of(
    family: &str,
    n: Option<i64>,
    f: &LaurentPoly,
    l: u32,
) -> Result<DivisibilityReport> {
    if !is_prime(l as u64) {
        return Err(Error::NotPrime(l as u64));
    }
    let buckets = bucket_sums(f, l);
    let buckets_equal = buckets.iter().all(|b| *b == buckets[0]);
    let phi = cyclotomic(l);
    let quotient = exact_quotient(f, &phi)?;
    if let Some(q) = &quotient {
        if &(q * &phi) != f {
            return Err(Error::InternalInconsistency {
                modulus: l,
                buckets_equal,
                divisible: true,
            });
        }
    }
    let divisible = quotient.is_some();
    if divisible != buckets_equal {
        return Err(Error::InternalInconsistency {
            modulus: l,
            buckets_equal,
            divisible,
        });
    }
    let symmetric = check_symmetric(f);
    let unimodal = check_unimodal(f);
    let quotient_nonnegative = quotient.as_ref().map(LaurentPoly::is_nonnegative);
    if l % 2 == 1
        && symmetric
        && unimodal
        && f.is_nonnegative()
        && quotient_nonnegative == Some(false)
    {
        return Err(Error::PositivityViolation { modulus: l });
    }
    Ok(DivisibilityReport {
        family: family.to_string(),
        modulus: l,
        n,
        buckets,
        divisible,
        quotient,
        quotient_nonnegative,
        symmetric,
        unimodal,
    })
}

/// Strictly unimodal symmetric polynomials divisible by `Phi_l` have
/// strictly positive quotients on the quotient's window.
pub fn quotient_is_positive(q: &LaurentPoly) -> bool {
    q.dense().iter().all(|c| c.is_positive())
}
