use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// A partition: a non-increasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless `parts` is non-increasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be positive and non-increasing: {parts:?}"
        );
        Self { parts }
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    pub fn conjugate(&self) -> Partition {
        let mut conj = Vec::with_capacity(self.largest() as usize);
        for j in 0..self.largest() {
            conj.push(self.parts.iter().take_while(|&&p| p > j).count() as u32);
        }
        Partition { parts: conj }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

/// Every partition of `n` once, in reverse lexicographic order.
pub fn enum_partitions(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        let mut ones = 0;
        while a.last() == Some(&1) {
            a.pop();
            ones += 1;
        }
        if let Some(x) = a.pop() {
            let y = x - 1;
            let mut rem = ones + 1;
            a.push(y);
            while rem > 0 {
                let p = rem.min(y);
                a.push(p);
                rem -= p;
            }
            self.next = Some(a);
        }
        Some(Partition { parts: cur })
    }
}

/// Calls `f` on each partition of `n` whose parts lie in `[min_part, max_part]`,
/// passing the parts in non-increasing order.
pub fn for_each_bounded(n: u32, min_part: u32, max_part: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(rem: u32, lo: u32, hi: u32, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if rem == 0 {
            f(buf);
            return;
        }
        let mut p = hi.min(rem);
        while p >= lo.max(1) {
            buf.push(p);
            rec(rem - p, lo, p, buf, f);
            buf.pop();
            p -= 1;
        }
    }
    rec(n, min_part, max_part, &mut Vec::new(), f);
}

/// Calls `f` on each partition of `n` into distinct parts, in decreasing order.
pub fn for_each_distinct(n: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(rem: u32, hi: u32, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if rem == 0 {
            f(buf);
            return;
        }
        let mut p = hi.min(rem);
        // The remaining distinct parts below p sum to at most p(p+1)/2.
        while p >= 1 && p * (p + 1) / 2 >= rem {
            buf.push(p);
            rec(rem - p, p - 1, buf, f);
            buf.pop();
            p -= 1;
        }
    }
    rec(n, n, &mut Vec::new(), f);
}

/// Largest part minus number of parts.
pub fn rank_of(lambda: &Partition) -> i64 {
    lambda.largest() as i64 - lambda.len() as i64
}

/// Largest part when 1 is not a part; otherwise the number of parts larger
/// than the number of ones, minus the number of ones. The empty partition
/// has crank 0.
pub fn crank_of(lambda: &Partition) -> i64 {
    let ones = lambda.multiplicity(1) as u32;
    if ones == 0 {
        return lambda.largest() as i64;
    }
    let mu = lambda.parts.iter().filter(|&&p| p > ones).count() as i64;
    mu - ones as i64
}

/// Hook lengths of every cell of the Young diagram, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.size() as usize);
    for (k, &row) in lambda.parts.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row - j as u32 - 1;
            let leg = conj.parts[j] - k as u32 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// No hook length is divisible by `t`.
pub fn is_t_core(lambda: &Partition, t: u32) -> bool {
    hook_lengths(lambda).iter().all(|h| h % t != 0)
}

/// Number of partitions of `n`, by enumeration.
pub fn p_of(n: u32) -> u64 {
    enum_partitions(n).count() as u64
}

/// Total number of smallest parts over the partitions of `n`, by enumeration.
pub fn spt_of(n: u32) -> u64 {
    enum_partitions(n)
        .map(|l| l.smallest().map_or(0, |s| l.multiplicity(s) as u64))
        .sum()
}

/// Number of overpartitions of each size `0..=n_max`, by enumeration: a
/// partition with `d` distinct part sizes carries `2^d` overline choices.
pub fn overpartition_counts(n_max: u32) -> Vec<u64> {
    (0..=n_max)
        .map(|k| {
            enum_partitions(k)
                .map(|l| {
                    let mut d = l.parts().to_vec();
                    d.dedup();
                    1u64 << d.len()
                })
                .sum()
        })
        .collect()
}

/// Number of overpartition pairs of `n`.
pub fn pp_of(n: u32) -> u64 {
    let op = overpartition_counts(n);
    (0..=n as usize).map(|a| op[a] * op[n as usize - a]).sum()
}

/// `p(0..=n_max)` by Euler's pentagonal recurrence.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n_max + 1];
    p[0] = BigInt::from(1);
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            let plus = k % 2 == 1;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if plus {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(p_of(5), 7);
        assert_eq!(p_of(10), 42);
        assert_eq!(enum_partitions(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        let pn = partition_numbers(100);
        for n in 0..=25u32 {
            assert_eq!(BigInt::from(p_of(n)), pn[n as usize]);
        }
        assert_eq!(pn[100], BigInt::from(190569292u64));
        assert_eq!(spt_of(3), 5);
        assert_eq!(spt_of(4), 10);
        assert_eq!(pp_of(1), 4);
        assert_eq!(pp_of(2), 12);
    }

    #[test]
    fn partitions_are_distinct_and_valid() {
        let all: Vec<_> = enum_partitions(12).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        assert!(all.iter().all(|l| l.size() == 12));
        let mut bounded = 0;
        for_each_bounded(12, 1, 12, &mut |_| bounded += 1);
        assert_eq!(bounded, all.len());
        let mut distinct = 0;
        for_each_distinct(12, &mut |p| {
            assert!(p.windows(2).all(|w| w[0] > w[1]));
            distinct += 1;
        });
        assert_eq!(distinct, 15);
    }

    #[test]
    fn statistics() {
        assert_eq!(rank_of(&Partition::new(vec![3, 1, 1])), 0);
        assert_eq!(rank_of(&Partition::new(vec![5])), 4);
        assert_eq!(crank_of(&Partition::new(vec![2, 1, 1, 1])), -3);
        assert_eq!(crank_of(&Partition::new(vec![4, 1])), 0);
        assert_eq!(crank_of(&Partition::new(vec![4, 2, 1])), 1);
        assert_eq!(crank_of(&Partition::new(vec![3, 2])), 3);
        assert_eq!(crank_of(&Partition::empty()), 0);
    }

    #[test]
    fn hooks() {
        let mut h = hook_lengths(&Partition::new(vec![2, 2]));
        h.sort_unstable();
        assert_eq!(h, vec![1, 2, 2, 3]);
        assert_eq!(hook_lengths(&Partition::new(vec![3, 1])), vec![4, 2, 1, 1]);
        assert!(is_t_core(&Partition::new(vec![2, 1]), 2));
        assert!(!is_t_core(&Partition::new(vec![2]), 2));
    }

    #[test]
    fn conjugation_negates_rank() {
        for l in enum_partitions(15) {
            assert_eq!(rank_of(&l.conjugate()), -rank_of(&l));
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }
}
