use num_bigint::BigInt;

use partpoly::combinat::{
    oracle_crank, oracle_orank, oracle_parts_count, oracle_rank, oracle_spt_crank,
    oracle_spt_crank_naive, oracle_thook, oracle_unimodal, overpartition_counts, pp_of,
};
use partpoly::cyclo::bucket_sums;
use partpoly::genfun::{
    expand, expand_crank, expand_orank, expand_parts_count, expand_rank, expand_spt_crank,
    expand_strongly_unimodal, expand_tables, expand_tcore_crank, expand_thook, expand_unimodal,
    expand_wagner_crank, expand_wagner_crank_printed, partition_parts_poly, stanton_beta,
    stanton_modified, tcore_crank_table, write_rows_csv, StantonKind,
};
use partpoly::{Error, LaurentPoly, StatTable, Statistic};

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn rank_rows() {
    let r = expand_rank(5).unwrap();
    assert_eq!(r[5], lp(&[(4, 1), (2, 1), (1, 1), (0, 1), (-1, 1), (-2, 1), (-4, 1)]));
    assert_eq!(r[0], LaurentPoly::one());
    assert_eq!(r[4].eval_at_one(), int(5));
}

#[test]
fn crank_rows() {
    let c = expand_crank(5).unwrap();
    assert_eq!(c[1], lp(&[(1, 1), (-1, 1), (0, -1)]));
    assert_eq!(c[0], LaurentPoly::one());
    assert_eq!(c[5].eval_at_one(), int(7));
}

#[test]
fn spt_crank_rows() {
    let s = expand_spt_crank(6).unwrap();
    assert_eq!(s[3].eval_at_one(), int(5));
    assert_eq!(s[1], LaurentPoly::one());
    assert_eq!(s[4], oracle_spt_crank(4).to_poly());
    assert_eq!(
        s[4],
        lp(&[(0, 2), (1, 2), (-1, 2), (2, 1), (-2, 1), (3, 1), (-3, 1)])
    );
}

#[test]
fn orank_rows() {
    let o = expand_orank(2).unwrap();
    assert_eq!(o[0], LaurentPoly::one());
    assert_eq!(o[1].eval_at_one(), int(4));
    assert_eq!(o[2].eval_at_one(), int(12));
    assert_eq!(bucket_sums(&o[2], 3), vec![int(4); 3]);
}

#[test]
fn unimodal_rows() {
    let u = expand_unimodal(3).unwrap();
    assert_eq!(u[3], lp(&[(2, 1), (1, 1), (0, 2), (-1, 1), (-2, 1)]));
    assert_eq!(u[0], LaurentPoly::one());
    assert_eq!(u[2].eval_at_one(), int(3));
    let s = expand_strongly_unimodal(3).unwrap();
    assert_eq!(s[3].eval_at_one(), int(3));
    assert_eq!(s[1], LaurentPoly::one());
}

#[test]
fn strongly_unimodal_top_degree_at_200() {
    let s = expand_strongly_unimodal(200).unwrap();
    // 1 + 2 + ... + 19 = 190 <= 200 < 210: at most 19 parts, rank at most 18.
    assert_eq!(s[200].max_exp(), 18);
    assert_eq!(s[200].min_exp(), -18);
}

#[test]
fn hook_rows() {
    for t in 2..=6 {
        let h = expand_thook(t, 12).unwrap();
        assert_eq!(h[0], LaurentPoly::one());
        for (n, row) in h.iter().enumerate() {
            assert_eq!(row, &oracle_thook(t, n as u32).to_poly(), "t={t} n={n}");
        }
    }
    // (2,2) has two hooks of even length.
    let h = expand_thook(2, 4).unwrap();
    assert!(h[4].coeff(2) >= int(1));
    assert_eq!(h[4].eval_at_one(), int(5));
    assert!(matches!(expand(Statistic::THook(1), 3), Err(Error::UnsupportedModulus(1))));
}

#[test]
fn wagner_variants() {
    let w = expand_wagner_crank(4).unwrap();
    assert_eq!(w[0], LaurentPoly::one());
    assert_eq!(w[2].eval_at_one(), int(12));
    assert!(w[3].reverse() == w[3]);
    let counts = overpartition_counts(4);
    let printed = expand_wagner_crank_printed(4).unwrap();
    for n in 0..=4 {
        assert_eq!(w[n].eval_at_one(), BigInt::from(pp_of(n as u32)));
        assert_eq!(printed[n].eval_at_one(), BigInt::from(counts[n]));
    }
    assert_ne!(printed[2].eval_at_one(), int(12));
}

#[test]
fn tcore_crank_rows() {
    let t5 = tcore_crank_table(5, 4).unwrap();
    assert_eq!(t5.total(), int(5));
    assert!((0..5).all(|m| t5.get(m) == int(1)));
    let zero = tcore_crank_table(5, 0).unwrap();
    assert_eq!(zero.counts().len(), 1);
    assert_eq!(zero.get(0), int(1));
    let t7 = tcore_crank_table(7, 5).unwrap();
    assert_eq!(&t7.total() % 7, int(0));
    assert!(matches!(expand_tcore_crank(4, 3), Err(Error::UnsupportedModulus(4))));
}

#[test]
fn parts_count_rows() {
    let f = expand_parts_count(5).unwrap();
    assert_eq!(f[5], lp(&[(5, 1), (4, 1), (3, 2), (2, 2), (1, 1)]));
    assert_eq!(f[1], lp(&[(1, 1)]));
    for n in 0..=12 {
        let rows = expand_parts_count(n).unwrap();
        assert_eq!(rows[n], oracle_parts_count(n as u32).to_poly());
    }
    let p5 = partition_parts_poly(5).unwrap();
    assert_eq!(p5.w_power, 1);
    assert_eq!(p5.coeffs, [1, 2, 2, 1, 1].map(int).to_vec());
}

#[test]
fn stanton_examples() {
    assert_eq!([5, 7, 11].map(stanton_beta), [4, 5, 6]);
    let c = stanton_modified(StantonKind::Crank, 5, 0).unwrap();
    let crank4 = &expand_crank(4).unwrap()[4];
    assert_eq!(c, crank4 + &lp(&[(-1, 1), (4, -1), (1, 1), (-4, -1)]));
    let r = stanton_modified(StantonKind::Rank, 7, 0).unwrap();
    let rank5 = &expand_rank(5).unwrap()[5];
    assert_eq!(r, rank5 + &lp(&[(3, 1), (4, -1), (-3, 1), (-4, -1)]));
    assert!(matches!(
        stanton_modified(StantonKind::Rank, 11, 0),
        Err(Error::OutOfScope { .. })
    ));
}

#[test]
fn series_match_oracles() {
    let rank = expand_rank(18).unwrap();
    let crank = expand_crank(18).unwrap();
    for n in 2..=18 {
        assert_eq!(rank[n as usize], oracle_rank(n).to_poly());
        assert_eq!(crank[n as usize], oracle_crank(n).to_poly());
    }
    let spt = expand_spt_crank(12).unwrap();
    for n in 1..=12 {
        assert_eq!(spt[n as usize], oracle_spt_crank_naive(n).to_poly(), "n={n}");
    }
    let orank = expand_orank(10).unwrap();
    let weak = expand_unimodal(14).unwrap();
    for n in 0..=10 {
        assert_eq!(orank[n as usize], oracle_orank(n).to_poly(), "n={n}");
    }
    for n in 0..=14 {
        assert_eq!(weak[n as usize], oracle_unimodal(n, false).to_poly(), "n={n}");
    }
}

#[test]
fn tables_and_csv() {
    let tables = expand_tables(Statistic::Rank, 5).unwrap();
    assert_eq!(tables[5], StatTable::from_poly(Statistic::Rank, 5, &expand_rank(5).unwrap()[5]));
    assert!(tables[5].is_symmetric());
    let mut buf = Vec::new();
    write_rows_csv(&mut buf, &expand_rank(2).unwrap(), 0).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text, "n,m,count\n0,0,1\n1,0,1\n2,-1,1\n2,1,1\n");
}

#[test]
fn statistic_names_round_trip() {
    for s in [
        Statistic::Rank,
        Statistic::Crank,
        Statistic::SptCrank,
        Statistic::ORank,
        Statistic::UnimodalRank,
        Statistic::StronglyUnimodalRank,
        Statistic::TCoreCrank(7),
        Statistic::THook(3),
        Statistic::WagnerCrank,
        Statistic::WagnerCrankPrinted,
        Statistic::PartsCount,
    ] {
        assert_eq!(s.to_string().parse::<Statistic>().unwrap(), s);
    }
    assert!("nonsense".parse::<Statistic>().is_err());
}
