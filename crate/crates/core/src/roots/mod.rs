//! Principal polynomials, their roots, and how evenly the roots spread
//! around the unit circle.

mod extended;
mod figure;
mod measure;
mod principal;
mod solve;

pub use figure::{figure_export, roots_svg, write_roots_csv, FigureFormat};
pub use measure::{
    angle, erdos_turan, erdos_turan_coeffs, erdos_turan_l_squared, ln_abs,
    next_triangular_index_minus_one, radial_profile, radial_profile_of, star_discrepancy,
    star_discrepancy_of, strongly_unimodal_degree, ErdosTuran, RadialBin, RadialProfile,
    DEFAULT_SPORADIC_DELTA,
};
pub use principal::{is_doubled_family, principal_poly, principal_polys, PrincipalPoly};
pub use solve::{
    solve_coeffs, solve_principal, solve_roots, vieta_check, RootSet, SolveOptions, VietaCheck,
    DEFAULT_TOLERANCE,
};
