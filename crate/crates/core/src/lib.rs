//! Exact computer algebra for the color analogue of the Heisenberg Lie algebra.
//!
//! The generators `A1, A2, A3` of the color Heisenberg algebra satisfy
//! `{A1,A2} = A3`, `{A1,A3} = 0` and `{A2,A3} = 0`. This crate realizes them
//! as normal-ordered power series in Weyl generators `A`, `B` with
//! `AB - BA = I`, checks the realizations by exact arithmetic over the
//! Gaussian rationals, and evaluates the resulting operators on polynomials.
//!
//! Module map:
//!
//! * [`numkit`]: rationals, Gaussian rationals, binomials, Euler, Bernoulli
//!   and Stirling numbers.
//! * [`weyl`]: `(B,A)`-normal-ordered truncated series and series in `A`.
//! * [`colorheis`]: realization builders, relation verifier, polynomial
//!   no-go solver and graded brackets.
//! * [`polyop`]: polynomials, the action of series on `C[x]`, block
//!   realizations and interpolation identities.
//! * [`cli`]: expression parser and command-line front end.

pub mod cli;
pub mod colorheis;
mod error;
pub mod numkit;
pub mod polyop;
pub mod weyl;

pub use error::{Error, Result};
pub use numkit::{GaussianRational, Rational};
pub use polyop::Poly;
pub use weyl::{ASeries, NormalSeries};

/// Window used by command-line constructions when `--window` is absent.
pub const DEFAULT_WINDOW: usize = 12;
