//! Brute-force distributions, computed from the combinatorial definitions.

use std::collections::BTreeMap;

use super::partition::{
    crank_of, enum_partitions, for_each_bounded, for_each_distinct, hook_lengths, rank_of,
};
use crate::genfun::{StatTable, Statistic};

fn table(statistic: Statistic, n: u32, counts: BTreeMap<i64, i64>) -> StatTable {
    StatTable::from_counts(statistic, n, counts)
}

pub fn oracle_rank(n: u32) -> StatTable {
    let mut c = BTreeMap::new();
    for l in enum_partitions(n) {
        *c.entry(rank_of(&l)).or_insert(0) += 1;
    }
    table(Statistic::Rank, n, c)
}

/// Meaningful for `n >= 2`; the generating function disagrees with the
/// combinatorial crank at `n = 1`.
pub fn oracle_crank(n: u32) -> StatTable {
    let mut c = BTreeMap::new();
    for l in enum_partitions(n) {
        *c.entry(crank_of(&l)).or_insert(0) += 1;
    }
    table(Statistic::Crank, n, c)
}

/// Signed count of vector partitions `(p1, p2, p3)` of `n` with `p1` into
/// distinct parts, `1 <= s(p1) <= min(s(p2), s(p3))`, weight
/// `(-1)^(#p1 - 1)` and crank `#p2 - #p3`.
///
/// `p2` and `p3` only interact with `p1` through its smallest part, so they
/// are tabulated per smallest part by number of parts.
pub fn oracle_spt_crank(n: u32) -> StatTable {
    let mut c: BTreeMap<i64, i64> = BTreeMap::new();
    // by_min[s][b][k]: partitions of b with all parts >= s and k parts.
    let mut by_min: Vec<Vec<Vec<i64>>> = vec![Vec::new(); n as usize + 1];
    for (s, slot) in by_min.iter_mut().enumerate().skip(1) {
        *slot = (0..=n)
            .map(|b| {
                let mut row = vec![0i64; b as usize + 1];
                for_each_bounded(b, s as u32, b.max(1), &mut |p| row[p.len()] += 1);
                row
            })
            .collect();
    }
    for a in 1..=n {
        for_each_distinct(a, &mut |p1| {
            let s = *p1.last().unwrap() as usize;
            let sign = if p1.len() % 2 == 1 { 1 } else { -1 };
            let rest = n - a;
            for b in 0..=rest {
                let r2 = &by_min[s][b as usize];
                let r3 = &by_min[s][(rest - b) as usize];
                for (k2, &c2) in r2.iter().enumerate() {
                    if c2 == 0 {
                        continue;
                    }
                    for (k3, &c3) in r3.iter().enumerate() {
                        if c3 != 0 {
                            *c.entry(k2 as i64 - k3 as i64).or_insert(0) += sign * c2 * c3;
                        }
                    }
                }
            }
        });
    }
    table(Statistic::SptCrank, n, c)
}

/// [`oracle_spt_crank`] by listing every triple explicitly. Small `n` only.
pub fn oracle_spt_crank_naive(n: u32) -> StatTable {
    let all: Vec<Vec<Vec<u32>>> = (0..=n)
        .map(|k| enum_partitions(k).map(|l| l.into_parts()).collect())
        .collect();
    let smallest = |p: &Vec<u32>| p.last().copied().unwrap_or(u32::MAX);
    let mut c: BTreeMap<i64, i64> = BTreeMap::new();
    for a in 1..=n {
        for p1 in all[a as usize].iter().filter(|p| p.windows(2).all(|w| w[0] > w[1])) {
            let s = smallest(p1);
            let sign = if p1.len() % 2 == 1 { 1 } else { -1 };
            for b in 0..=n - a {
                for p2 in &all[b as usize] {
                    for p3 in &all[(n - a - b) as usize] {
                        if s <= smallest(p2).min(smallest(p3)) {
                            *c.entry(p2.len() as i64 - p3.len() as i64).or_insert(0) += sign;
                        }
                    }
                }
            }
        }
    }
    table(Statistic::SptCrank, n, c)
}

/// What the overpartition pair rank needs to know about one overpartition.
#[derive(Clone, Copy)]
struct OverSummary {
    largest: u32,
    parts: i64,
    overlined: i64,
    largest_overlined: bool,
}

fn overpartitions(n: u32) -> Vec<OverSummary> {
    let mut out = Vec::new();
    for l in enum_partitions(n) {
        let mut distinct = l.parts().to_vec();
        distinct.dedup();
        for mask in 0u64..(1 << distinct.len()) {
            out.push(OverSummary {
                largest: l.largest(),
                parts: l.len() as i64,
                overlined: mask.count_ones() as i64,
                // distinct[0] is the largest part.
                largest_overlined: mask & 1 == 1,
            });
        }
    }
    out
}

/// Overpartition pairs `(lambda, mu)` of `n` by
/// `l - n(lambda) - nbar(mu) - chi`, where `chi = 1` when the largest part of
/// the pair occurs only in `mu` and is not overlined there.
pub fn oracle_orank(n: u32) -> StatTable {
    let ops: Vec<Vec<OverSummary>> = (0..=n).map(overpartitions).collect();
    let mut c: BTreeMap<i64, i64> = BTreeMap::new();
    for a in 0..=n {
        for lam in &ops[a as usize] {
            for mu in &ops[(n - a) as usize] {
                let l = lam.largest.max(mu.largest) as i64;
                let chi = (mu.largest > lam.largest && !mu.largest_overlined) as i64;
                *c.entry(l - lam.parts - mu.overlined - chi).or_insert(0) += 1;
            }
        }
    }
    table(Statistic::ORank, n, c)
}

/// Unimodal sequences of size `n` by (parts after the peak) minus (parts
/// before it). Weak sequences are counted once per choice of peak among
/// their maximal entries; strict ones have a unique peak.
pub fn oracle_unimodal(n: u32, strict: bool) -> StatTable {
    fn rec(
        rem: u32,
        descending: bool,
        strict: bool,
        seq: &mut Vec<u32>,
        out: &mut BTreeMap<i64, i64>,
    ) {
        if rem == 0 {
            if seq.is_empty() {
                if !strict {
                    *out.entry(0).or_insert(0) += 1;
                }
                return;
            }
            let max = *seq.iter().max().unwrap();
            let len = seq.len() as i64;
            for (k, _) in seq.iter().enumerate().filter(|(_, &v)| v == max) {
                *out.entry(len - 1 - 2 * k as i64).or_insert(0) += 1;
            }
            return;
        }
        let last = seq.last().copied();
        for v in 1..=rem {
            let next_desc = match last {
                None => false,
                Some(l) if descending => {
                    if v > l || (strict && v == l) {
                        continue;
                    }
                    true
                }
                Some(l) => {
                    if strict && v == l {
                        continue;
                    }
                    v < l
                }
            };
            seq.push(v);
            rec(rem - v, next_desc, strict, seq, out);
            seq.pop();
        }
    }
    let mut c = BTreeMap::new();
    rec(n, false, strict, &mut Vec::new(), &mut c);
    let stat = if strict {
        Statistic::StronglyUnimodalRank
    } else {
        Statistic::UnimodalRank
    };
    table(stat, n, c)
}

/// Partitions of `n` by number of hook lengths divisible by `t`.
pub fn oracle_thook(t: u32, n: u32) -> StatTable {
    let mut c = BTreeMap::new();
    for l in enum_partitions(n) {
        let m = hook_lengths(&l).iter().filter(|h| *h % t == 0).count() as i64;
        *c.entry(m).or_insert(0) += 1;
    }
    table(Statistic::THook(t), n, c)
}

/// Number of `t`-cores of `n`.
pub fn oracle_tcore_count(t: u32, n: u32) -> u64 {
    super::tcore::enum_t_cores(t, n).count() as u64
}

/// Partitions of `n` by number of parts.
pub fn oracle_parts_count(n: u32) -> StatTable {
    let mut c = BTreeMap::new();
    for l in enum_partitions(n) {
        *c.entry(l.len() as i64).or_insert(0) += 1;
    }
    table(Statistic::PartsCount, n, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{pp_of, spt_of};
    use num_bigint::BigInt;

    fn counts(t: &StatTable) -> Vec<(i64, i64)> {
        t.counts()
            .iter()
            .map(|(&m, c)| (m, i64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn rank_of_five() {
        let r = oracle_rank(5);
        assert_eq!(
            counts(&r),
            vec![(-4, 1), (-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1), (4, 1)]
        );
        assert_eq!(counts(&oracle_rank(0)), vec![(0, 1)]);
        for n in 0..20 {
            assert!(oracle_rank(n).is_symmetric());
        }
    }

    #[test]
    fn crank_of_five_is_equidistributed_mod_five() {
        let mut b = [0i64; 5];
        for (m, c) in counts(&oracle_crank(4)) {
            b[m.rem_euclid(5) as usize] += c;
        }
        assert_eq!(b, [1; 5]);
    }

    #[test]
    fn spt_crank_small() {
        assert_eq!(counts(&oracle_spt_crank(1)), vec![(0, 1)]);
        assert_eq!(oracle_spt_crank(3).total(), BigInt::from(5));
        assert_eq!(
            counts(&oracle_spt_crank(4)),
            vec![(-3, 1), (-2, 1), (-1, 2), (0, 2), (1, 2), (2, 1), (3, 1)]
        );
        for n in 1..=10 {
            let fast = oracle_spt_crank(n);
            assert_eq!(fast, oracle_spt_crank_naive(n));
            assert_eq!(fast.total(), BigInt::from(spt_of(n)));
        }
        let mut b = [0i64; 13];
        for (m, c) in counts(&oracle_spt_crank(6)) {
            b[m.rem_euclid(13) as usize] += c;
        }
        assert!(b.iter().any(|&x| x != b[0]));
    }

    #[test]
    fn orank_small() {
        assert_eq!(counts(&oracle_orank(0)), vec![(0, 1)]);
        let two = oracle_orank(2);
        assert_eq!(counts(&two), vec![(-1, 4), (0, 4), (1, 4)]);
        for n in 0..8 {
            assert_eq!(oracle_orank(n).total(), BigInt::from(pp_of(n)));
        }
    }

    #[test]
    fn unimodal_small() {
        assert_eq!(
            counts(&oracle_unimodal(3, false)),
            vec![(-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1)]
        );
        assert_eq!(oracle_unimodal(2, false).total(), BigInt::from(3));
        assert_eq!(counts(&oracle_unimodal(3, true)), vec![(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(counts(&oracle_unimodal(1, true)), vec![(0, 1)]);
    }

    #[test]
    fn hooks_and_cores() {
        for n in 0..12 {
            for t in 2..5 {
                assert_eq!(
                    oracle_thook(t, n).total(),
                    BigInt::from(crate::combinat::p_of(n))
                );
            }
        }
        assert_eq!(oracle_tcore_count(5, 4), 5);
        assert_eq!(
            counts(&oracle_parts_count(5)),
            vec![(1, 1), (2, 2), (3, 2), (4, 1), (5, 1)]
        );
    }
}
