use num_bigint::BigInt;

use partpoly::combinat::{
    core_size, crank_of, enum_partitions, enum_t_cores, hook_lengths, is_t_core,
    oracle_crank, oracle_orank, oracle_rank, oracle_spt_crank, oracle_spt_crank_naive,
    oracle_tcore_count, oracle_tcore_crank, oracle_thook, oracle_unimodal, p_of,
    partition_numbers, phi2, phi2_inverse, pp_of, rank_of, spt_of, tcore_crank_of_vector,
    Partition,
};
use partpoly::cyclo::bucket_sums;
use partpoly::Error;

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn partition_counts() {
    assert_eq!(enum_partitions(5).count(), 7);
    assert_eq!(enum_partitions(10).count(), 42);
    assert_eq!(enum_partitions(0).collect::<Vec<_>>(), vec![Partition::empty()]);
    let p = partition_numbers(30);
    for n in 0..=30 {
        assert_eq!(BigInt::from(p_of(n)), p[n as usize]);
    }
}

#[test]
fn statistics_of_single_partitions() {
    assert_eq!(rank_of(&Partition::new(vec![3, 1, 1])), 0);
    assert_eq!(rank_of(&Partition::new(vec![5])), 4);
    assert_eq!(crank_of(&Partition::new(vec![2, 1, 1, 1])), -3);
    assert_eq!(crank_of(&Partition::new(vec![5])), 5);
}

#[test]
fn rank_and_crank_oracles() {
    let r5 = oracle_rank(5);
    for m in [-4, -2, -1, 0, 1, 2, 4] {
        assert_eq!(r5.get(m), int(1));
    }
    assert_eq!(r5.total(), int(7));
    let r0 = oracle_rank(0);
    assert_eq!(r0.get(0), int(1));
    assert_eq!(r0.total(), int(1));
    for n in [4, 9, 14, 19] {
        let b = bucket_sums(&oracle_crank(n).to_poly(), 5);
        assert!(b.iter().all(|x| *x == b[0]), "n={n}");
    }
}

#[test]
fn spt_oracles() {
    assert_eq!(oracle_spt_crank(3).total(), int(5));
    assert_eq!(spt_of(3), 5);
    let one = oracle_spt_crank(1);
    assert_eq!(one.counts().len(), 1);
    assert_eq!(one.get(0), int(1));
    let b = bucket_sums(&oracle_spt_crank(6).to_poly(), 13);
    assert!(b.iter().any(|x| *x != b[0]));
    for n in 1..=12 {
        assert_eq!(oracle_spt_crank(n), oracle_spt_crank_naive(n), "n={n}");
        assert_eq!(oracle_spt_crank(n).total(), BigInt::from(spt_of(n)));
    }
}

#[test]
fn overpartition_pair_oracle() {
    assert_eq!(oracle_orank(2).total(), int(12));
    assert_eq!(pp_of(2), 12);
    assert_eq!(oracle_orank(0).total(), int(1));
    let b = bucket_sums(&oracle_orank(2).to_poly(), 3);
    assert_eq!(b, vec![int(4); 3]);
}

#[test]
fn unimodal_oracles() {
    let weak = oracle_unimodal(3, false);
    for (m, c) in [(-2, 1), (-1, 1), (0, 2), (1, 1), (2, 1)] {
        assert_eq!(weak.get(m), int(c));
    }
    assert_eq!(weak.total(), int(6));
    assert_eq!(oracle_unimodal(3, true).total(), int(3));
    let one = oracle_unimodal(1, true);
    assert_eq!(one.counts().len(), 1);
    assert_eq!(one.get(0), int(1));
}

#[test]
fn hooks_and_cores() {
    let mut h = hook_lengths(&Partition::new(vec![2, 2]));
    h.sort_unstable();
    assert_eq!(h, vec![1, 2, 2, 3]);
    assert_eq!(oracle_tcore_count(5, 4), 5);
    for t in 2..=6 {
        for n in 0..=12 {
            assert_eq!(oracle_thook(t, n).total(), BigInt::from(p_of(n)));
        }
    }
    assert!(enum_t_cores(3, 8).all(|l| is_t_core(&l, 3)));
}

#[test]
fn phi2_bijection() {
    assert_eq!(phi2(&Partition::empty(), 7).unwrap(), vec![0; 7]);
    let cores: Vec<Partition> = enum_t_cores(5, 4).collect();
    assert_eq!(cores.len(), 5);
    let mut vs: Vec<Vec<i64>> = cores.iter().map(|l| phi2(l, 5).unwrap()).collect();
    for v in &vs {
        assert_eq!(v.iter().sum::<i64>(), 0);
        assert_eq!(core_size(5, v), 4);
    }
    vs.sort();
    vs.dedup();
    assert_eq!(vs.len(), 5);
    for t in [5, 7, 11] {
        for n in 0..=16 {
            for l in enum_t_cores(t, n) {
                let v = phi2(&l, t).unwrap();
                assert_eq!(core_size(t, &v), n as i64);
                assert_eq!(phi2_inverse(&v, t).unwrap(), l);
            }
        }
    }
    assert!(matches!(
        phi2(&Partition::new(vec![5]), 5),
        Err(Error::NotATCore(_, 5))
    ));
    assert!(matches!(phi2_inverse(&[1, 0, 0, 0, 0], 5), Err(Error::NotZeroSum(_))));
}

#[test]
fn tcore_crank_classes() {
    let t5 = oracle_tcore_crank(5, 4).unwrap();
    assert!((0..5).all(|m| t5.get(m) == int(1)));
    let t11 = oracle_tcore_crank(11, 6).unwrap();
    let size = t11.get(0);
    assert!((0..11).all(|m| t11.get(m) == size));
    let zero = oracle_tcore_crank(5, 0).unwrap();
    assert_eq!(zero.get(0), int(1));
    assert_eq!(zero.total(), int(1));
    assert!(matches!(tcore_crank_of_vector(4, &[0; 4]), Err(Error::UnsupportedModulus(4))));
}
