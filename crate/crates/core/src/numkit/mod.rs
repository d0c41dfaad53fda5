//! Exact number kernels: rationals, Gaussian rationals and the special
//! sequences (binomials, Euler, Bernoulli, Stirling) used by the identities.

mod gaussian;
mod rational;
mod special;

pub use gaussian::GaussianRational;
pub use rational::{int, parse_rational, rat, Rational};
pub use special::{
    bernoulli_number, bernoulli_polynomial, binomial, euler_number, euler_polynomial,
    factorial, stirling2, stirling2_triangle, stirling_alternating_sum, stirling_transform_g,
};
