//! Operators on the polynomial space `C[x]`: the action of normal-ordered
//! series with `A = d/dx` and `B = x`, 2x2 block realizations and the
//! interpolation identities that fall out of the third relation.

mod apply;
mod block;
mod interp;
mod poly;

pub use apply::{action_residuals, apply_series, realization_action_check};
pub use block::{
    block_residuals, block_triple, mat2_mul, pauli, BlockKind, BlockOp, Mat2, PolyOp,
};
pub use interp::{
    euler_interp_residual, euler_interp_residual_truncated, geometric_operator_action,
    reflection_operator_action, scaled_reflection_operator_action, stirling_interp_residual,
    stirling_interp_residual_truncated, OperatorTriple,
};
pub use poly::Poly;
