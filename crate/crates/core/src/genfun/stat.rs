use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::laurent::LaurentPoly;

/// The partition statistics this crate knows how to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statistic {
    Rank,
    Crank,
    SptCrank,
    ORank,
    UnimodalRank,
    StronglyUnimodalRank,
    /// Mod-`t` crank of `t`-cores, `t` in {5, 7, 11}.
    TCoreCrank(u32),
    /// Number of hook lengths divisible by `t`.
    THook(u32),
    /// `prod (1+wq^n)(1+w^-1 q^n) / ((1-wq^n)(1-w^-1 q^n))`.
    WagnerCrank,
    /// The product with the denominator `(1-wq^n)(1+w^-1 q^n)`, which
    /// cancels down to `prod (1+wq^n)/(1-wq^n)`.
    WagnerCrankPrinted,
    /// Number of parts.
    PartsCount,
}

impl Statistic {
    /// Distribution is invariant under `m -> -m`.
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            Statistic::Rank
                | Statistic::Crank
                | Statistic::SptCrank
                | Statistic::ORank
                | Statistic::UnimodalRank
                | Statistic::StronglyUnimodalRank
                | Statistic::WagnerCrank
        )
    }

    /// Supported by `m >= 0` only.
    pub fn is_one_sided(self) -> bool {
        matches!(
            self,
            Statistic::THook(_) | Statistic::PartsCount | Statistic::WagnerCrankPrinted
        )
    }

    /// Kebab-case family name used in files and on the command line.
    pub fn family_name(self) -> &'static str {
        match self {
            Statistic::Rank => "rank",
            Statistic::Crank => "crank",
            Statistic::SptCrank => "spt-crank",
            Statistic::ORank => "o-rank",
            Statistic::UnimodalRank => "unimodal",
            Statistic::StronglyUnimodalRank => "strongly-unimodal",
            Statistic::TCoreCrank(_) => "tcore-crank",
            Statistic::THook(_) => "thook",
            Statistic::WagnerCrank => "wagner",
            Statistic::WagnerCrankPrinted => "wagner-printed",
            Statistic::PartsCount => "parts",
        }
    }

    /// The `t` parameter, if the family has one.
    pub fn t(self) -> Option<u32> {
        match self {
            Statistic::TCoreCrank(t) | Statistic::THook(t) => Some(t),
            _ => None,
        }
    }

    /// Parses a family name; `t` fills in the parameter for `tcore-crank`
    /// and `thook`.
    pub fn from_name(name: &str, t: Option<u32>) -> Result<Self, Error> {
        let need_t = || t.ok_or_else(|| Error::UnsupportedFamily(format!("{name} requires t")));
        Ok(match name {
            "rank" => Statistic::Rank,
            "crank" | "p" => Statistic::Crank,
            "spt-crank" | "spt" => Statistic::SptCrank,
            "o-rank" | "orank" | "pp" => Statistic::ORank,
            "unimodal" => Statistic::UnimodalRank,
            "strongly-unimodal" => Statistic::StronglyUnimodalRank,
            "tcore-crank" | "tcore" => Statistic::TCoreCrank(need_t()?),
            "thook" => Statistic::THook(need_t()?),
            "wagner" => Statistic::WagnerCrank,
            "wagner-printed" => Statistic::WagnerCrankPrinted,
            "parts" => Statistic::PartsCount,
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        })
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t() {
            Some(t) => write!(f, "{}:{t}", self.family_name()),
            None => f.write_str(self.family_name()),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once(':') {
            Some((name, t)) => {
                let t = t
                    .parse()
                    .map_err(|_| Error::UnsupportedFamily(s.to_string()))?;
                Statistic::from_name(name, Some(t))
            }
            None => Statistic::from_name(s, None),
        }
    }
}

/// Exact distribution `m -> count` of one statistic over the objects of size `n`.
/// Zero counts are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatTable {
    pub statistic: Statistic,
    pub n: u32,
    counts: BTreeMap<i64, BigInt>,
}

impl StatTable {
    pub fn new(statistic: Statistic, n: u32) -> Self {
        Self {
            statistic,
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_counts<I, C>(statistic: Statistic, n: u32, counts: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut t = Self::new(statistic, n);
        for (m, c) in counts {
            t.add(m, c.into());
        }
        t
    }

    pub fn from_poly(statistic: Statistic, n: u32, f: &LaurentPoly) -> Self {
        Self::from_counts(statistic, n, f.terms().map(|(m, c)| (m, c.clone())))
    }

    pub fn add(&mut self, m: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.counts.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.counts.remove(&m);
        }
    }

    pub fn get(&self, m: i64) -> BigInt {
        self.counts.get(&m).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &BTreeMap<i64, BigInt> {
        &self.counts
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.counts.iter().map(|(&m, c)| (m, c.clone())))
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(&m, c)| self.counts.get(&-m) == Some(c))
    }
}
