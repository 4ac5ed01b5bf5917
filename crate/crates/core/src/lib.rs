//! Exact partition polynomials.
//!
//! Two-variable generating functions for partition statistics are expanded
//! into rows of Laurent polynomials in `w`, checked for divisibility by
//! cyclotomic polynomials, and studied numerically through their roots.

pub mod combinat;
pub mod cyclo;
pub mod error;
pub mod genfun;
pub mod laurent;
pub mod roots;

pub use error::{Error, Result};
pub use genfun::{StatTable, Statistic};
pub use laurent::{LaurentPoly, Monomial, QSeriesTable};
pub use roots::{PrincipalPoly, RootSet};
