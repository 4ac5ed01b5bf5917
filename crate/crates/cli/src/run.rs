//! Executes a validated [`RunConfig`].

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use partpoly::combinat::{
    oracle_crank, oracle_orank, oracle_parts_count, oracle_rank, oracle_spt_crank,
    oracle_tcore_crank, oracle_thook, oracle_unimodal,
};
use partpoly::cyclo::{
    certify_progression, check_stanton_range, congruence_sweep_rows, search_progressions_rows,
    DivisibilityReport,
};
use partpoly::genfun::{expand, tcore_crank_counts, write_rows_csv};
use partpoly::roots::{
    erdos_turan, principal_poly, principal_polys, radial_profile, roots_svg, solve_principal,
    star_discrepancy, vieta_check, write_roots_csv, RootSet, SolveOptions,
};
use partpoly::{Error, LaurentPoly, StatTable, Statistic};

use crate::config::{CommandKind, Format, RunConfig};
use crate::witness::{Failure, Witness};

type Outcome = Result<(), Failure>;

/// Runs the command inside a thread pool sized by `--jobs`.
pub fn execute(cfg: &RunConfig) -> Outcome {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start worker threads: {e}")))?;
    pool.install(|| dispatch(cfg))
}

fn dispatch(cfg: &RunConfig) -> Outcome {
    match cfg.command {
        CommandKind::Expand => run_expand(cfg),
        CommandKind::Oracle => run_oracle(cfg),
        CommandKind::Divide => run_divide(cfg),
        CommandKind::Congruence => run_congruence(cfg),
        CommandKind::Search => run_search(cfg),
        CommandKind::Stanton => run_stanton(cfg),
        CommandKind::Tcore => run_tcore(cfg),
        CommandKind::Roots => run_roots(cfg),
        CommandKind::Discrepancy => run_discrepancy(cfg),
        CommandKind::Figure => run_figure(cfg),
    }
}

fn fail(cfg: &RunConfig) -> impl Fn(Error) -> Failure + '_ {
    move |e| Failure::from_error(e, cfg.command.name(), cfg.family.map(|f| f.to_string()))
}

fn witness(cfg: &RunConfig, n: Option<i64>, expected: Value, actual: Value, context: Value) -> Failure {
    Failure::Assertion(Witness {
        command: cfg.command.name().to_string(),
        family: cfg.family.map(|f| f.to_string()),
        n,
        expected,
        actual,
        context,
    })
}

fn emit(cfg: &RunConfig, bytes: &[u8]) -> Outcome {
    match &cfg.out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(cfg: &RunConfig, value: &T) -> Outcome {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    emit(cfg, s.as_bytes())
}

fn rows(cfg: &RunConfig) -> Result<Vec<LaurentPoly>, Failure> {
    expand(cfg.family.unwrap(), cfg.rows_needed()).map_err(fail(cfg))
}

fn run_expand(cfg: &RunConfig) -> Outcome {
    let n_max = cfg.n_max.unwrap() as usize;
    let rows = rows(cfg)?;
    let rows = &rows[..=n_max];
    match cfg.format {
        Format::Json => {
            let body: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(n, f)| json!({ "n": n, "poly": f }))
                .collect();
            emit_json(cfg, &json!({ "family": cfg.family.unwrap().to_string(), "rows": body }))
        }
        _ => {
            let mut buf = Vec::new();
            write_rows_csv(&mut buf, rows, 0).map_err(fail(cfg))?;
            emit(cfg, &buf)
        }
    }
}

fn oracle_table(family: Statistic, n: u32) -> Result<StatTable, Error> {
    Ok(match family {
        Statistic::Rank => oracle_rank(n),
        Statistic::Crank => oracle_crank(n),
        Statistic::SptCrank => oracle_spt_crank(n),
        Statistic::ORank => oracle_orank(n),
        Statistic::UnimodalRank => oracle_unimodal(n, false),
        Statistic::StronglyUnimodalRank => oracle_unimodal(n, true),
        Statistic::TCoreCrank(t) => oracle_tcore_crank(t, n)?,
        Statistic::THook(t) => oracle_thook(t, n),
        Statistic::PartsCount => oracle_parts_count(n),
        Statistic::WagnerCrank | Statistic::WagnerCrankPrinted => {
            return Err(Error::UnsupportedFamily(format!("no oracle for {family}")))
        }
    })
}

fn counts_json(t: &StatTable) -> Value {
    Value::Object(
        t.counts()
            .iter()
            .map(|(m, c)| (m.to_string(), Value::from(c.to_string())))
            .collect(),
    )
}

fn run_oracle(cfg: &RunConfig) -> Outcome {
    let family = cfg.family.unwrap();
    let n = cfg.n.unwrap();
    let oracle = oracle_table(family, n).map_err(fail(cfg))?;
    let series = match family {
        Statistic::TCoreCrank(t) => partpoly::genfun::tcore_crank_table(t, n).map_err(fail(cfg))?,
        _ => StatTable::from_poly(family, n, &expand(family, n as usize).map_err(fail(cfg))?[n as usize]),
    };
    // The crank generating function gives w^-1 - 1 + w at n = 1, which is not
    // a distribution of any statistic on the single partition of 1.
    let convention = family == Statistic::Crank && n == 1;
    let agree = series == oracle;
    if !agree && !convention {
        return Err(witness(
            cfg,
            Some(n as i64),
            counts_json(&oracle),
            counts_json(&series),
            json!({ "expected": "enumeration", "actual": "generating function" }),
        ));
    }
    match cfg.format {
        Format::Csv => {
            let mut s = String::from("n,m,series,oracle\n");
            let mut ms: Vec<i64> = series.counts().keys().chain(oracle.counts().keys()).copied().collect();
            ms.sort_unstable();
            ms.dedup();
            for m in ms {
                s.push_str(&format!("{n},{m},{},{}\n", series.get(m), oracle.get(m)));
            }
            emit(cfg, s.as_bytes())
        }
        _ => {
            let mut body = json!({
                "family": family.to_string(),
                "n": n,
                "agree": agree,
                "total": oracle.total().to_string(),
                "series": counts_json(&series),
                "oracle": counts_json(&oracle),
            });
            if convention {
                body["note"] = json!("row 1 of the crank series is w^-1 - 1 + w by convention");
            }
            emit_json(cfg, &body)
        }
    }
}

#[derive(Serialize)]
struct RowSummary<'a> {
    n: Option<i64>,
    divisible: bool,
    quotient_nonnegative: Option<bool>,
    symmetric: bool,
    unimodal: bool,
    quotient: Option<&'a LaurentPoly>,
}

fn summaries(reports: &[DivisibilityReport]) -> Vec<RowSummary<'_>> {
    reports
        .iter()
        .map(|r| RowSummary {
            n: r.n,
            divisible: r.divisible,
            quotient_nonnegative: r.quotient_nonnegative,
            symmetric: r.symmetric,
            unimodal: r.unimodal,
            quotient: r.quotient.as_ref(),
        })
        .collect()
}

fn run_divide(cfg: &RunConfig) -> Outcome {
    let family = cfg.family.unwrap();
    let (l, residue) = (cfg.modulus.unwrap(), cfg.residue.unwrap());
    let n_max = cfg.n_max.unwrap();
    let rows = rows(cfg)?;
    let reports = certify_progression(
        &family.to_string(),
        &rows,
        l,
        residue,
        cfg.n_min,
        n_max,
        cfg.require_nonnegative,
    )
    .map_err(fail(cfg))?;
    emit_json(
        cfg,
        &json!({
            "family": family.to_string(),
            "modulus": l,
            "residue": residue % l,
            "n_min": cfg.n_min,
            "n_max": n_max,
            "certified": reports.len(),
            "rows": summaries(&reports),
        }),
    )
}

fn run_congruence(cfg: &RunConfig) -> Outcome {
    let family = cfg.family.unwrap();
    let (l, residue) = (cfg.modulus.unwrap(), cfg.residue.unwrap());
    let rows = rows(cfg)?;
    let sweep = congruence_sweep_rows(&family.to_string(), &rows, l, residue, cfg.n_max.unwrap());
    if let Some(bad) = sweep.first_nonzero() {
        return Err(witness(
            cfg,
            Some(bad.n as i64),
            json!(0),
            json!(bad.residue),
            json!({ "modulus": l, "value_at_w_1": bad.value }),
        ));
    }
    emit_json(cfg, &sweep)
}

fn run_search(cfg: &RunConfig) -> Outcome {
    let family = cfg.family.unwrap();
    let rows = rows(cfg)?;
    let found = search_progressions_rows(
        &family.to_string(),
        &rows,
        cfg.modulus.unwrap(),
        cfg.divisor,
        cfg.n_max.unwrap(),
    )
    .map_err(fail(cfg))?;
    emit_json(cfg, &found)
}

fn run_stanton(cfg: &RunConfig) -> Outcome {
    let kind = cfg.kind.unwrap();
    let l = cfg.modulus.unwrap();
    let reports = check_stanton_range(kind, l, cfg.n_max.unwrap()).map_err(|e| {
        Failure::from_error(e, cfg.command.name(), Some(format!("{kind:?}").to_lowercase()))
    })?;
    emit_json(
        cfg,
        &json!({
            "kind": format!("{kind:?}").to_lowercase(),
            "modulus": l,
            "n_max": cfg.n_max.unwrap(),
            "certified": reports.len(),
            "rows": summaries(&reports),
        }),
    )
}

fn run_tcore(cfg: &RunConfig) -> Outcome {
    let t = cfg.t.unwrap();
    let (lo, hi) = match (cfg.n, cfg.n_max) {
        (Some(n), _) => (n, n),
        (None, Some(m)) => (0, m),
        (None, None) => unreachable!("validated"),
    };
    let counts = tcore_crank_counts(t, hi as usize).map_err(fail(cfg))?;
    let rows = &counts[lo as usize..=hi as usize];
    match cfg.format {
        Format::Json => {
            let body: Vec<Value> = rows
                .iter()
                .zip(lo..)
                .map(|(c, n)| {
                    let total: u64 = c.iter().sum();
                    json!({ "n": n, "total": total, "classes": c })
                })
                .collect();
            emit_json(cfg, &json!({ "t": t, "rows": body }))
        }
        _ => {
            let mut s = String::from("n,r,count\n");
            for (c, n) in rows.iter().zip(lo..) {
                for (r, k) in c.iter().enumerate() {
                    s.push_str(&format!("{n},{r},{k}\n"));
                }
            }
            emit(cfg, s.as_bytes())
        }
    }
}

fn options(cfg: &RunConfig) -> SolveOptions {
    SolveOptions {
        tolerance: cfg.tolerance,
        force_extended: cfg.force_extended,
        ..SolveOptions::default()
    }
}

fn solve(cfg: &RunConfig, family: Statistic, n: u32) -> Result<RootSet, Failure> {
    let p = principal_poly(family, n).map_err(fail(cfg))?;
    solve_principal(&p, &options(cfg)).map_err(fail(cfg))
}

fn title(family: Statistic, n: u32) -> String {
    format!("{family} n={n}")
}

fn write_figure(path: &Path, roots: &[Complex64], fmt: Format, title: &str) -> Outcome {
    let bytes = match fmt {
        Format::Csv => {
            let mut buf = Vec::new();
            write_roots_csv(&mut buf, roots).map_err(|e| Failure::Usage(e.to_string()))?;
            buf
        }
        _ => roots_svg(roots, title).into_bytes(),
    };
    fs::write(path, bytes)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn run_roots(cfg: &RunConfig) -> Outcome {
    let family = cfg.family.unwrap();
    let n = cfg.n.unwrap();
    let p = principal_poly(family, n).map_err(fail(cfg))?;
    let r = solve_principal(&p, &options(cfg)).map_err(fail(cfg))?;
    if r.residual_scale > cfg.tolerance {
        return Err(witness(
            cfg,
            Some(n as i64),
            json!(cfg.tolerance),
            json!(r.residual_scale),
            json!({ "check": "backward error of every root" }),
        ));
    }
    let vieta = vieta_check(&p.coeffs, &r);
    if !vieta.within(1e-6) {
        return Err(witness(
            cfg,
            Some(n as i64),
            json!(1e-6),
            json!(vieta),
            json!({ "check": "Vieta relations" }),
        ));
    }
    if let Some(path) = &cfg.svg {
        write_figure(path, &r.roots, Format::Svg, &title(family, n))?;
    }
    if let Some(path) = &cfg.csv {
        write_figure(path, &r.roots, Format::Csv, "")?;
    }
    let et = erdos_turan(&p);
    emit_json(
        cfg,
        &json!({
            "family": family.to_string(),
            "n": n,
            "degree": r.degree,
            "doubled": p.doubled,
            "w_power": p.w_power,
            "precision_bits": r.precision_bits,
            "iterations": r.iterations,
            "residual_scale": r.residual_scale,
            "vieta": vieta,
            "star_discrepancy": star_discrepancy(&r),
            "erdos_turan": et,
            "radial": radial_profile(&r, cfg.bins, cfg.delta),
        }),
    )
}

fn run_discrepancy(cfg: &RunConfig) -> Outcome {
    let family = cfg.family.unwrap();
    let mut ns = cfg.n_list.clone();
    ns.sort_unstable();
    ns.dedup();
    let polys = principal_polys(family, &ns).map_err(fail(cfg))?;
    let mut points = Vec::with_capacity(polys.len());
    for p in &polys {
        let r = solve_principal(p, &options(cfg)).map_err(fail(cfg))?;
        let et = erdos_turan(p);
        points.push(json!({
            "n": p.n,
            "degree": r.degree,
            "star_discrepancy": star_discrepancy(&r),
            "log_l_over_d": et.log_l_over_d,
            "residual_scale": r.residual_scale,
        }));
    }
    if cfg.require_decreasing {
        let d = |v: &Value| v["star_discrepancy"].as_f64().unwrap();
        if let Some(w) = points.windows(2).find(|w| d(&w[1]) >= d(&w[0])) {
            return Err(witness(
                cfg,
                w[1]["n"].as_i64(),
                json!(format!("below {}", d(&w[0]))),
                json!(d(&w[1])),
                json!({ "previous_n": w[0]["n"], "check": "star discrepancy decreases" }),
            ));
        }
    }
    emit_json(cfg, &json!({ "family": family.to_string(), "points": points }))
}

fn read_roots_csv(path: &Path) -> Result<Vec<Complex64>, Failure> {
    let bad = |e: csv::Error| Failure::Usage(format!("{}: {e}", path.display()));
    let mut rdr = csv::Reader::from_path(path).map_err(bad)?;
    let headers = rdr.headers().map_err(bad)?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Failure::Usage(format!("{}: missing column {name}", path.display())))
    };
    let (re, im) = (col("re")?, col("im")?);
    let mut roots = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(bad)?;
        let num = |i: usize| {
            rec[i]
                .trim()
                .parse::<f64>()
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        };
        roots.push(Complex64::new(num(re)?, num(im)?));
    }
    Ok(roots)
}

fn run_figure(cfg: &RunConfig) -> Outcome {
    let (roots, default_title) = match &cfg.input {
        Some(path) => (read_roots_csv(path)?, path.display().to_string()),
        None => {
            let (family, n) = (cfg.family.unwrap(), cfg.n.unwrap());
            (solve(cfg, family, n)?.roots, title(family, n))
        }
    };
    let title = cfg.title.clone().unwrap_or(default_title);
    write_figure(cfg.out.as_deref().unwrap(), &roots, cfg.format, &title)
}
