//! Seeded random inputs for the randomized verification suites.

use rand::Rng;

use crate::numkit::{GaussianRational, Rational};
use crate::polyop::Poly;
use crate::weyl::ASeries;

/// Random rational `p/q` with `|p| <= 9`, `1 <= q <= 9`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=9).into())
}

pub fn small_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

/// Odd series supported on a random subset of `{1, 3, 5}`, flagged odd.
pub fn odd_series<R: Rng>(rng: &mut R, window: usize) -> ASeries {
    let mut terms = Vec::new();
    for d in [1usize, 3, 5] {
        if rng.gen_bool(0.5) {
            terms.push((d, GaussianRational::real(small_rational(rng))));
        }
    }
    ASeries::from_coeffs(terms, window)
        .into_odd()
        .expect("odd support")
}

/// `(c, phi, psi)` for the three-relation builder at `window`; `phi` is
/// exact one degree further, as the builder needs.
pub fn three_rel_case<R: Rng>(rng: &mut R, window: usize) -> (GaussianRational, ASeries, ASeries) {
    let c = GaussianRational::real(small_nonzero_rational(rng));
    (c, odd_series(rng, window + 1), odd_series(rng, window + 1))
}

/// Polynomial of degree at most `max_deg` with small rational coefficients.
pub fn poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::from_coeffs(
        (0..=deg)
            .map(|_| GaussianRational::real(small_rational(rng)))
            .collect(),
    )
}

/// Coefficients `f_0 ..= f_deg` of a random polynomial in one variable.
pub fn coefficients<R: Rng>(rng: &mut R, max_deg: usize) -> Vec<GaussianRational> {
    poly(rng, max_deg).coeffs().to_vec()
}
