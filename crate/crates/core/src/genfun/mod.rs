//! Two-variable generating functions expanded into rows of Laurent
//! polynomials in `w`.

mod expand;
mod stanton;
mod stat;
mod tcore;

use std::io::Write;

pub use expand::{
    expand_crank, expand_orank, expand_parts_count, expand_rank, expand_spt_crank,
    expand_strongly_unimodal, expand_thook, expand_unimodal, expand_wagner_crank,
    expand_wagner_crank_printed,
};
pub use stanton::{
    stanton_beta, stanton_modified, stanton_modified_rows, stanton_scope, StantonKind,
};
pub use stat::{StatTable, Statistic};
pub use tcore::{expand_tcore_crank, tcore_crank_counts, tcore_crank_table};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::roots::PrincipalPoly;

/// Rows `0..=truncation` of the family's generating function.
pub fn expand(statistic: Statistic, truncation: usize) -> Result<Vec<LaurentPoly>> {
    match statistic {
        Statistic::Rank => expand_rank(truncation),
        Statistic::Crank => expand_crank(truncation),
        Statistic::SptCrank => expand_spt_crank(truncation),
        Statistic::ORank => expand_orank(truncation),
        Statistic::UnimodalRank => expand_unimodal(truncation),
        Statistic::StronglyUnimodalRank => expand_strongly_unimodal(truncation),
        Statistic::TCoreCrank(t) => expand_tcore_crank(t, truncation),
        Statistic::THook(t) => {
            if t < 2 {
                return Err(Error::UnsupportedModulus(t));
            }
            expand_thook(t, truncation)
        }
        Statistic::WagnerCrank => expand_wagner_crank(truncation),
        Statistic::WagnerCrankPrinted => expand_wagner_crank_printed(truncation),
        Statistic::PartsCount => expand_parts_count(truncation),
    }
}

/// Rows as tables.
pub fn expand_tables(statistic: Statistic, truncation: usize) -> Result<Vec<StatTable>> {
    Ok(expand(statistic, truncation)?
        .iter()
        .enumerate()
        .map(|(n, f)| StatTable::from_poly(statistic, n as u32, f))
        .collect())
}

/// `F_n(w) = sum_k p_k(n) w^k`, stored with the factor `w` pulled out so the
/// constant coefficient is `p_1(n) = 1`.
pub fn partition_parts_poly(n: u32) -> Result<PrincipalPoly> {
    let rows = expand_parts_count(n as usize)?;
    PrincipalPoly::from_one_sided(Statistic::PartsCount, n, &rows[n as usize])
}

/// Writes rows as CSV `n,m,count`, one line per nonzero coefficient.
pub fn write_rows_csv<W: Write>(out: W, rows: &[LaurentPoly], first_n: usize) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "m", "count"])?;
    for (i, f) in rows.iter().enumerate() {
        let n = (first_n + i).to_string();
        for (m, c) in f.terms() {
            w.write_record([n.as_str(), &m.to_string(), &c.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}
