use std::collections::BTreeSet;

use super::partition::{enum_partitions, is_t_core, Partition};
use crate::error::{Error, Result};
use crate::genfun::{StatTable, Statistic};

/// Weights of the mod-`t` crank `sum w_i n_i` on zero-sum vectors.
pub fn tcore_crank_weights(t: u32) -> Result<&'static [i64]> {
    match t {
        5 => Ok(&[4, 1, 0, 1, 4]),
        7 => Ok(&[4, 2, 1, 0, 1, 2, 4]),
        11 => Ok(&[4, 9, 5, 3, 1, 0, 1, 3, 5, 9, 4]),
        _ => Err(Error::UnsupportedModulus(t)),
    }
}

/// Crank class in `0..t` of the vector `v`.
pub fn tcore_crank_of_vector(t: u32, v: &[i64]) -> Result<u32> {
    let w = tcore_crank_weights(t)?;
    let s: i64 = w.iter().zip(v).map(|(a, b)| a * b).sum();
    Ok(s.rem_euclid(t as i64) as u32)
}

/// `t * |v|^2 / 2 + sum i * v_i`, the size of the core encoded by `v`.
pub fn core_size(t: u32, v: &[i64]) -> i64 {
    let t = t as i64;
    let sq: i64 = v.iter().map(|x| x * x).sum();
    let lin: i64 = v.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
    (t * sq) / 2 + lin
}

/// Maps a `t`-core to its zero-sum vector through the balanced abacus.
///
/// Beads sit at `lambda_j - j` for `j >= 1` (with `lambda_j = 0` past the
/// last part). Runner `i` holds the positions congruent to `i` mod `t`; for a
/// core each runner is filled up to a first gap at `t * n_i + i`.
pub fn phi2(lambda: &Partition, t: u32) -> Result<Vec<i64>> {
    if t < 2 || !is_t_core(lambda, t) {
        return Err(Error::NotATCore(lambda.parts().to_vec(), t));
    }
    let t = t as i64;
    let len = lambda.len() as i64;
    let beads: BTreeSet<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| p as i64 - (j as i64 + 1))
        .collect();
    // Everything at or below -len-1 is a bead.
    let filled = |x: i64| x <= -len - 1 || beads.contains(&x);
    let top = beads.iter().next_back().copied().unwrap_or(-len - 1);
    let mut v = Vec::with_capacity(t as usize);
    for i in 0..t {
        let mut x = -len - 1 - (-len - 1 - i).rem_euclid(t);
        while filled(x) {
            x += t;
        }
        let mut y = x + t;
        while y <= top {
            if filled(y) {
                return Err(Error::NotATCore(lambda.parts().to_vec(), t as u32));
            }
            y += t;
        }
        v.push((x - i) / t);
    }
    Ok(v)
}

/// Inverse of [`phi2`].
pub fn phi2_inverse(v: &[i64], t: u32) -> Result<Partition> {
    if v.len() != t as usize || v.iter().sum::<i64>() != 0 {
        return Err(Error::NotZeroSum(v.to_vec()));
    }
    let t = t as i64;
    let gaps: Vec<i64> = v
        .iter()
        .enumerate()
        .map(|(i, &n)| t * n + i as i64)
        .collect();
    let low = *gaps.iter().min().unwrap();
    let mut beads: Vec<i64> = Vec::new();
    for (i, &g) in gaps.iter().enumerate() {
        let mut x = low + (i as i64 - low).rem_euclid(t);
        while x < g {
            beads.push(x);
            x += t;
        }
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(beads.len() as i64, -low);
    let parts = beads
        .iter()
        .enumerate()
        .map(|(j, &b)| (b + j as i64 + 1) as u32)
        .collect();
    Ok(Partition::from_unsorted(parts))
}

/// Partitions of `n` that are `t`-cores, by enumeration.
pub fn enum_t_cores(t: u32, n: u32) -> impl Iterator<Item = Partition> {
    enum_partitions(n).filter(move |l| is_t_core(l, t))
}

/// Crank classes of the `t`-cores of `n`, computed through [`phi2`].
pub fn oracle_tcore_crank(t: u32, n: u32) -> Result<StatTable> {
    tcore_crank_weights(t)?;
    let mut counts = vec![0u64; t as usize];
    for lambda in enum_t_cores(t, n) {
        let v = phi2(&lambda, t)?;
        counts[tcore_crank_of_vector(t, &v)? as usize] += 1;
    }
    Ok(StatTable::from_counts(
        Statistic::TCoreCrank(t),
        n,
        counts.into_iter().enumerate().map(|(m, c)| (m as i64, c)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_core_is_zero_vector() {
        for t in [2, 5, 7, 11] {
            assert_eq!(phi2(&Partition::empty(), t).unwrap(), vec![0; t as usize]);
            assert_eq!(
                phi2_inverse(&vec![0; t as usize], t).unwrap(),
                Partition::empty()
            );
        }
    }

    #[test]
    fn round_trip_and_size_identity() {
        for t in [5u32, 7, 11] {
            for n in 0..=20 {
                let mut seen = BTreeSet::new();
                for lambda in enum_t_cores(t, n) {
                    let v = phi2(&lambda, t).unwrap();
                    assert_eq!(v.iter().sum::<i64>(), 0);
                    assert_eq!(core_size(t, &v), n as i64, "{lambda} {v:?}");
                    assert_eq!(phi2_inverse(&v, t).unwrap(), lambda);
                    assert!(seen.insert(v));
                }
            }
        }
    }

    #[test]
    fn five_cores_of_four() {
        let vs: BTreeSet<Vec<i64>> = enum_t_cores(5, 4).map(|l| phi2(&l, 5).unwrap()).collect();
        assert_eq!(vs.len(), 5);
        let table = oracle_tcore_crank(5, 4).unwrap();
        assert_eq!(table.counts().len(), 5);
        assert!(table.counts().values().all(|c| *c == 1.into()));
    }

    #[test]
    fn rejects_non_cores_and_bad_vectors() {
        assert!(matches!(
            phi2(&Partition::new(vec![5]), 5),
            Err(Error::NotATCore(..))
        ));
        assert!(matches!(
            phi2_inverse(&[1, 0, 0, 0, 0], 5),
            Err(Error::NotZeroSum(_))
        ));
        assert!(matches!(
            oracle_tcore_crank(4, 3),
            Err(Error::UnsupportedModulus(4))
        ));
    }

    #[test]
    fn equinumerous_classes() {
        let t11 = oracle_tcore_crank(11, 6).unwrap();
        assert_eq!(t11.counts().len(), 11);
        let first = t11.get(0);
        assert!(t11.counts().values().all(|c| *c == first));
        assert_eq!(
            oracle_tcore_crank(5, 0).unwrap().counts().iter().collect::<Vec<_>>(),
            vec![(&0, &1.into())]
        );
    }
}
