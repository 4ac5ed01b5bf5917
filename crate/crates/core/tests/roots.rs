use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use partpoly::genfun::expand;
use partpoly::roots::{
    angle, erdos_turan, erdos_turan_coeffs, erdos_turan_l_squared, figure_export,
    principal_poly, radial_profile_of, roots_svg, solve_coeffs, solve_principal, solve_roots,
    star_discrepancy, star_discrepancy_of, strongly_unimodal_degree, vieta_check, FigureFormat,
    SolveOptions, DEFAULT_TOLERANCE,
};
use partpoly::{Error, PrincipalPoly, Statistic};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn principal_examples() {
    let n5 = principal_poly(Statistic::Rank, 5).unwrap();
    assert_eq!(n5.coeffs, ints(&[1, 2, 2, 0, 2]));
    assert!(n5.doubled);
    let s1 = principal_poly(Statistic::SptCrank, 1).unwrap();
    assert_eq!(s1.degree(), 0);
    assert!(matches!(solve_principal(&s1, &SolveOptions::default()), Err(Error::ConstantPolynomial)));
    let rows = expand(Statistic::THook(2), 4).unwrap();
    let h = PrincipalPoly::from_one_sided(Statistic::THook(2), 4, &rows[4]).unwrap();
    let total: BigInt = h.coeffs.iter().sum();
    assert_eq!(total, BigInt::from(5));
}

#[test]
fn symmetrized_principal_is_the_doubled_row() {
    let rows = expand(Statistic::Crank, 12).unwrap();
    let mut checked = 0;
    for n in 1..=12u32 {
        // Rows with no crank-0 partition have no principal polynomial.
        let Ok(p) = PrincipalPoly::from_row(Statistic::Crank, n, &rows[n as usize]) else {
            continue;
        };
        assert_eq!(p.symmetrized(), rows[n as usize].scale(&BigInt::from(2)));
        checked += 1;
    }
    assert!(checked >= 8);
}

#[test]
fn erdos_turan_examples() {
    let et = erdos_turan_coeffs(&ints(&[1, 1]));
    assert_eq!(et.l_squared, "4");
    let m100 = principal_poly(Statistic::Crank, 100).unwrap();
    let et = erdos_turan(&m100);
    let log_p100 = (190569292f64).ln();
    assert!(et.log_l_over_d > 0.0 && et.log_l_over_d < log_p100 / 100.0);
}

#[test]
fn solver_examples() {
    let phi5 = solve_coeffs(&ints(&[1, 1, 1, 1, 1]), &SolveOptions::default()).unwrap();
    assert_eq!(phi5.roots.len(), 4);
    for z in &phi5.roots {
        assert!((z.norm() - 1.0).abs() < 1e-10);
        assert!((z.powu(5) - 1.0).norm() < 1e-9);
    }
    let cube = solve_coeffs(&ints(&[1, 3, 3, 1]), &SolveOptions::default()).unwrap();
    assert_eq!(cube.roots.len(), 3);
    for z in &cube.roots {
        assert!((z + 1.0).norm() < 1e-4);
    }
    assert!(cube.residual_scale <= DEFAULT_TOLERANCE);
}

#[test]
fn discrepancy_decreases_with_n() {
    let rows = expand(Statistic::Crank, 50).unwrap();
    let m20 = PrincipalPoly::from_row(Statistic::Crank, 20, &rows[20]).unwrap();
    let m50 = PrincipalPoly::from_row(Statistic::Crank, 50, &rows[50]).unwrap();
    let d20 = star_discrepancy(&solve_roots(&m20, DEFAULT_TOLERANCE).unwrap());
    let r50 = solve_roots(&m50, DEFAULT_TOLERANCE).unwrap();
    assert_eq!(r50.roots.len(), 50);
    assert!(star_discrepancy(&r50) < d20);
    assert!(vieta_check(&m50.coeffs, &r50).within(1e-6));

    let rank = expand(Statistic::Rank, 200).unwrap();
    let ds: Vec<f64> = [50u32, 100, 200]
        .iter()
        .map(|&n| {
            let p = PrincipalPoly::from_row(Statistic::Rank, n, &rank[n as usize]).unwrap();
            star_discrepancy(&solve_roots(&p, DEFAULT_TOLERANCE).unwrap())
        })
        .collect();
    assert!(ds[0] > ds[1] && ds[1] > ds[2], "{ds:?}");
}

#[test]
fn discrepancy_examples() {
    let d = 9;
    let unity: Vec<Complex64> = (0..d).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / d as f64)).collect();
    assert!((star_discrepancy_of(&unity) - 1.0 / d as f64).abs() < 1e-12);
    let clumped = vec![Complex64::new(2.0, 0.0); 100];
    assert!(star_discrepancy_of(&clumped) >= 0.99);
}

#[test]
fn radial_examples() {
    let phi5 = solve_coeffs(&ints(&[1, 1, 1, 1, 1]), &SolveOptions::default()).unwrap();
    let p = radial_profile_of(&phi5.roots, 10, 0.05);
    assert_eq!(p.bins.len(), 1);
    assert_eq!(p.sporadic, 0);
    let circle: Vec<Complex64> = (0..64).map(|k| Complex64::from_polar(1.0, 0.1 * k as f64)).collect();
    assert_eq!(radial_profile_of(&circle, 10, 0.05).bins.len(), 1);
}

#[test]
fn four_hook_moduli_split_in_two() {
    let h = principal_poly(Statistic::THook(4), 1000).unwrap();
    let r = solve_roots(&h, DEFAULT_TOLERANCE).unwrap();
    let p = radial_profile_of(&r.roots, 30, 0.05);
    assert!(p.bimodal, "{p:?}");
    assert!(p.sporadic > 0);
}

#[test]
fn degree_law_examples() {
    assert_eq!(strongly_unimodal_degree(3), 1);
    assert_eq!(strongly_unimodal_degree(1), 0);
    // 190 <= 200 < 210: 19 distinct parts fit, 20 do not.
    assert_eq!(strongly_unimodal_degree(200), 18);
}

#[test]
fn figure_examples() {
    let phi5 = solve_coeffs(&ints(&[1, 1, 1, 1, 1]), &SolveOptions::default()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("phi5.csv");
    figure_export(&phi5, FigureFormat::Csv, &csv_path, "phi5").unwrap();
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut angles: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(angles.len(), 4);
    angles.sort_by(f64::total_cmp);
    for (k, a) in angles.iter().enumerate() {
        assert!((a - TAU * (k + 1) as f64 / 5.0).abs() < 1e-9);
    }
    let empty = roots_svg(&[], "empty");
    assert!(empty.starts_with("<svg") && empty.trim_end().ends_with("</svg>"));
    let svg_path = dir.path().join("phi5.svg");
    figure_export(&phi5, FigureFormat::Svg, &svg_path, "phi5").unwrap();
    let a = std::fs::read(&svg_path).unwrap();
    figure_export(&phi5, FigureFormat::Svg, &svg_path, "phi5").unwrap();
    assert_eq!(a, std::fs::read(&svg_path).unwrap());
}

#[test]
fn extended_precision_agrees_with_double() {
    let p = principal_poly(Statistic::Rank, 40).unwrap();
    let fast = solve_principal(&p, &SolveOptions::default()).unwrap();
    let slow = solve_principal(&p, &SolveOptions { force_extended: true, ..SolveOptions::default() }).unwrap();
    assert_eq!(fast.precision_bits, 53);
    assert!(slow.precision_bits >= 128);
    let mut a = fast.roots.clone();
    let mut b = slow.roots.clone();
    let key = |z: &Complex64| (angle(*z), z.norm());
    a.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    b.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).norm() < 1e-6, "{x} vs {y}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn l_is_scale_invariant(
        mut c in prop::collection::vec(-40i64..=40, 2..30),
        s in prop::sample::select(vec![2i64, 3, 10]),
    ) {
        let d = c.len() - 1;
        if c[0] == 0 { c[0] = 1; }
        if c[d] == 0 { c[d] = -1; }
        let f = ints(&c);
        let g: Vec<BigInt> = f.iter().map(|x| x * s).collect();
        prop_assert_eq!(erdos_turan_l_squared(&f), erdos_turan_l_squared(&g));
    }

    #[test]
    fn solver_satisfies_vieta(c in prop::collection::vec(1i64..=30, 2..25)) {
        let f = ints(&c);
        let r = solve_coeffs(&f, &SolveOptions::default()).unwrap();
        prop_assert_eq!(r.roots.len(), c.len() - 1);
        prop_assert!(r.residual_scale <= DEFAULT_TOLERANCE);
        prop_assert!(vieta_check(&f, &r).within(1e-6));
    }
}
