use serde::{Deserialize, Serialize};

use super::expand::{expand_crank, expand_rank};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Which base polynomial a modified polynomial is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StantonKind {
    Rank,
    Crank,
}

impl std::str::FromStr for StantonKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rank" => Ok(StantonKind::Rank),
            "crank" => Ok(StantonKind::Crank),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// `l - (l^2 - 1)/24`.
pub fn stanton_beta(l: u32) -> i64 {
    l as i64 - (l as i64 * l as i64 - 1) / 24
}

/// Rank is covered for `l` in {5, 7}, crank for {5, 7, 11}.
pub fn stanton_scope(kind: StantonKind, l: u32) -> Result<()> {
    let ok = match kind {
        StantonKind::Rank => matches!(l, 5 | 7),
        StantonKind::Crank => matches!(l, 5 | 7 | 11),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfScope {
            what: format!("{kind:?} modulus {l}"),
            why: "modified polynomials are defined for rank with 5, 7 and crank with 5, 7, 11"
                .into(),
        })
    }
}

fn modify(kind: StantonKind, l: u32, big_n: i64, base: &LaurentPoly) -> LaurentPoly {
    let l = l as i64;
    let corr = match kind {
        StantonKind::Rank => [(big_n - 2, 1), (big_n - 1, -1), (2 - big_n, 1), (1 - big_n, -1)],
        StantonKind::Crank => [(big_n - l, 1), (big_n, -1), (l - big_n, 1), (-big_n, -1)],
    };
    base + &LaurentPoly::from_terms(corr.iter().map(|&(e, c)| (e, c)))
}

/// The modified polynomials for `n = 0..=n_max`, from one expansion.
pub fn stanton_modified_rows(kind: StantonKind, l: u32, n_max: u32) -> Result<Vec<LaurentPoly>> {
    stanton_scope(kind, l)?;
    let beta = stanton_beta(l);
    let top = (l as i64 * n_max as i64 + beta) as usize;
    let base = match kind {
        StantonKind::Rank => expand_rank(top)?,
        StantonKind::Crank => expand_crank(top)?,
    };
    Ok((0..=n_max as i64)
        .map(|n| {
            let big_n = l as i64 * n + beta;
            modify(kind, l, big_n, &base[big_n as usize])
        })
        .collect())
}

/// `rank_N + w^(N-2) - w^(N-1) + w^(2-N) - w^(1-N)` or
/// `crank_N + w^(N-l) - w^N + w^(l-N) - w^-N`, with `N = l n + beta`.
pub fn stanton_modified(kind: StantonKind, l: u32, n: u32) -> Result<LaurentPoly> {
    Ok(stanton_modified_rows(kind, l, n)?.pop().unwrap())
}
