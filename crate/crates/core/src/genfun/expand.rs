//! Generating functions expanded to a fixed order in `q`. Every expander
//! returns the rows `0..=truncation`, row `n` being the coefficient of `q^n`.

use crate::error::Result;
use crate::laurent::{LaurentPoly, Monomial, QSeriesTable};

const ONE: Monomial = Monomial::constant(1);
const W: Monomial = Monomial::w(1);
const W_INV: Monomial = Monomial::w(-1);

fn div_w_pair(s: &mut QSeriesTable, k: usize) -> Result<()> {
    s.div_factor(W, k)?;
    s.div_factor(W_INV, k)
}

/// `sum_n q^(n^2) / ((wq;q)_n (w^-1 q;q)_n)`.
pub fn expand_rank(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = QSeriesTable::zero(truncation);
    let mut d = QSeriesTable::one(truncation);
    for n in 0usize.. {
        let lead = n * n;
        if lead > truncation {
            break;
        }
        if n > 0 {
            div_w_pair(&mut d, n)?;
            d.truncate(truncation - lead);
        }
        out.add_shifted(&d, lead);
    }
    Ok(out.into_terms())
}

/// `prod_n (1 - q^n) / ((1 - wq^n)(1 - w^-1 q^n))`.
pub fn expand_crank(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut s = QSeriesTable::one(truncation);
    for k in 1..=truncation {
        s.mul_factor(ONE, k);
        div_w_pair(&mut s, k)?;
    }
    Ok(s.into_terms())
}

/// `sum_{n>=1} q^n (q^(n+1);q)_inf / ((wq^n;q)_inf (w^-1 q^n;q)_inf)`.
///
/// The products are built from the tail inwards: factors at `q^k` with
/// `k > truncation` are invisible, so `C_(T+1) = 1` and each step peels one
/// factor pair.
pub fn expand_spt_crank(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = QSeriesTable::zero(truncation);
    let mut c = QSeriesTable::one(truncation);
    for n in (1..=truncation).rev() {
        if n < truncation {
            c.mul_factor(ONE, n + 1);
        }
        div_w_pair(&mut c, n)?;
        out.add_shifted(&c, n);
    }
    Ok(out.into_terms())
}

/// `sum_n (-1;q)_n^2 q^n / ((wq;q)_n (w^-1 q;q)_n)`.
pub fn expand_orank(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = QSeriesTable::one(truncation);
    let mut term = QSeriesTable::one(truncation);
    for n in 1..=truncation {
        let neg_one = Monomial::constant(-1);
        term.mul_factor(neg_one, n - 1);
        term.mul_factor(neg_one, n - 1);
        div_w_pair(&mut term, n)?;
        term = term.shift_q(1);
        out.add_assign(&term);
    }
    Ok(out.into_terms())
}

/// `sum_n q^n / ((wq;q)_n (w^-1 q;q)_n)`: unimodal sequences with a marked
/// peak, parts after the peak counted by `w`.
pub fn expand_unimodal(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = QSeriesTable::one(truncation);
    let mut term = QSeriesTable::one(truncation);
    for n in 1..=truncation {
        div_w_pair(&mut term, n)?;
        term = term.shift_q(1);
        out.add_assign(&term);
    }
    Ok(out.into_terms())
}

/// `sum_{k>=1} q^k (-w^-1 q;q)_(k-1) (-wq;q)_(k-1)`: strictly increasing
/// parts below the peak `k` weighted by `w^-1`, strictly decreasing parts
/// after it by `w`.
pub fn expand_strongly_unimodal(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = QSeriesTable::zero(truncation);
    if truncation == 0 {
        return Ok(out.into_terms());
    }
    let mut term = QSeriesTable::one(truncation).shift_q(1);
    out.add_assign(&term);
    for k in 2..=truncation {
        term.mul_factor(Monomial::new(-1, -1), k - 1);
        term.mul_factor(Monomial::new(-1, 1), k - 1);
        term = term.shift_q(1);
        out.add_assign(&term);
    }
    Ok(out.into_terms())
}

/// Han's product `prod_n (1 - q^(tn))^t / ((1 - w^n q^(tn))^t (1 - q^n))`:
/// partitions by number of hook lengths divisible by `t`.
pub fn expand_thook(t: u32, truncation: usize) -> Result<Vec<LaurentPoly>> {
    assert!(t >= 2, "t-hooks need t >= 2");
    let t = t as usize;
    let mut s = QSeriesTable::one(truncation);
    for n in 1..=truncation {
        s.div_factor(ONE, n)?;
    }
    for n in 1..=truncation / t {
        let w_n = Monomial::w(n as i64);
        for _ in 0..t {
            s.mul_factor(ONE, t * n);
            s.div_factor(w_n, t * n)?;
        }
    }
    Ok(s.into_terms())
}

/// `prod_n (1 + wq^n)(1 + w^-1 q^n) / ((1 - wq^n)(1 - w^-1 q^n))`, which
/// counts overpartition pairs at `w = 1`.
pub fn expand_wagner_crank(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut s = QSeriesTable::one(truncation);
    for k in 1..=truncation {
        s.mul_factor(Monomial::new(-1, 1), k);
        s.mul_factor(Monomial::new(-1, -1), k);
        div_w_pair(&mut s, k)?;
    }
    Ok(s.into_terms())
}

/// `prod_n (1 + wq^n)(1 + w^-1 q^n) / ((1 - wq^n)(1 + w^-1 q^n))`, taken
/// literally. The shared factor cancels, leaving `prod (1 + wq^n)/(1 - wq^n)`,
/// which counts overpartitions, not pairs, at `w = 1`.
pub fn expand_wagner_crank_printed(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut s = QSeriesTable::one(truncation);
    for k in 1..=truncation {
        s.mul_factor(Monomial::new(-1, 1), k);
        s.mul_factor(Monomial::new(-1, -1), k);
        s.div_factor(W, k)?;
        s.div_factor(Monomial::new(-1, -1), k)?;
    }
    Ok(s.into_terms())
}

/// `prod_k 1/(1 - wq^k)`: partitions by number of parts.
pub fn expand_parts_count(truncation: usize) -> Result<Vec<LaurentPoly>> {
    let mut s = QSeriesTable::one(truncation);
    for k in 1..=truncation {
        s.div_factor(W, k)?;
    }
    Ok(s.into_terms())
}
