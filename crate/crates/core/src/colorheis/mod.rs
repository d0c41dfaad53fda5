//! Realizations of the color Heisenberg algebra by normal-ordered series,
//! their verification, the polynomial no-go solver and `Z_2^3`-graded
//! brackets.

mod graded;
pub mod linalg;
mod nogo;
mod realization;
mod recurrence;
pub mod sample;

pub use graded::{
    commutation_factor, generalized_jacobi_residual, graded_bracket, GradeVector,
    StructureConstants,
};
pub use nogo::{polynomial_nogo, polynomial_nogo_bounded, NoGoReport, NoGoSystem, NOGO_BOUND};
pub use realization::{
    build_three_rel, build_three_rel_unchecked, build_three_rel_via_operators, build_two_rel,
    check_closed_form_products, closed_form_products, relation_residuals, verify_relations,
    Realization, RealizationParams, Residuals,
};
pub use recurrence::{closed_form, iterate_diagonal, recurrence_closed_form_check};
