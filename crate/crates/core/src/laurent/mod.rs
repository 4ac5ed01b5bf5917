//! Exact Laurent polynomials in `w` and truncated `q`-series over them.

mod poly;
mod series;

pub use poly::LaurentPoly;
pub use series::{constant_series, Monomial, QSeriesTable};
