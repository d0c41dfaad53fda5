use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::numkit::{binomial, euler_number, factorial, GaussianRational, Rational};

use super::poly::Poly;

/// `(A1 f, A2 f, A3 f)`.
pub type OperatorTriple = (Poly, Poly, Poly);

fn euler_weight(n: usize) -> GaussianRational {
    GaussianRational::real(euler_number(2 * n) / Rational::from_integer(factorial(2 * n as u64)))
}

/// `sum_{2n <= deg p + extra} E_{2n}/(2n)! alpha^{2n} [p^(2n)(x-alpha) + p^(2n)(x+alpha)] / 2`.
fn euler_average(p: &Poly, alpha: &GaussianRational, extra: usize) -> Poly {
    let top = p.degree().unwrap_or(0) + extra;
    let half = GaussianRational::from_ratio(1, 2);
    let alpha_sq = alpha * alpha;
    let mut power = GaussianRational::one();
    let mut acc = Poly::zero();
    for n in 0..=top / 2 {
        let d = p.nth_derivative(2 * n);
        let both = &d.shift(&-alpha) + &d.shift(alpha);
        acc = &acc + &both.scale(&(&(&euler_weight(n) * &power) * &half));
        power = &power * &alpha_sq;
    }
    acc
}

/// `p(x) - 1/2 sum_n E_{2n}/(2n)! alpha^{2n} [p^(2n)(x-alpha) + p^(2n)(x+alpha)]`.
///
/// The sum stops at `2n = deg p`; beyond that every derivative vanishes.
/// The identity says the result is zero for every polynomial.
pub fn euler_interp_residual(p: &Poly, alpha: &GaussianRational) -> Poly {
    euler_interp_residual_truncated(p, alpha, 0)
}

/// As [`euler_interp_residual`] with the sum running `extra` degrees past
/// `deg p`.
pub fn euler_interp_residual_truncated(p: &Poly, alpha: &GaussianRational, extra: usize) -> Poly {
    p - &euler_average(p, alpha, extra)
}

/// `sum_{k <= top} (-1)^k / 2^{k+1} sum_l (-1)^l C(k,l) [p(x - 2(k-l)) + p(x + 2(k-l))]`.
fn geometric_average(p: &Poly, top: usize) -> Poly {
    let mut acc = Poly::zero();
    for k in 0..=top {
        let mut inner = Poly::zero();
        for l in 0..=k {
            let h = GaussianRational::from_int(2 * (k - l) as i64);
            let pair = &p.shift(&-&h) + &p.shift(&h);
            let mut c = Rational::from_integer(binomial(k as u64, l as u64));
            if l % 2 == 1 {
                c = -c;
            }
            inner = &inner + &pair.scale_rational(&c);
        }
        let mut w = Rational::new(BigInt::one(), BigInt::from(2).pow(k as u32 + 1));
        if k % 2 == 1 {
            w = -w;
        }
        acc = &acc + &inner.scale_rational(&w);
    }
    acc
}

/// `p(x) - sum_k (-1)^k / 2^{k+1} sum_l (-1)^l C(k,l) [p(x-2(k-l)) + p(x+2(k-l))]`.
///
/// The inner sum is a `k`-th finite difference with step 2, which kills a
/// polynomial of degree below `k`, so the outer sum stops at `k = deg p`.
pub fn stirling_interp_residual(p: &Poly) -> Poly {
    stirling_interp_residual_truncated(p, 0)
}

/// As [`stirling_interp_residual`] with the outer sum running to
/// `deg p + extra`.
pub fn stirling_interp_residual_truncated(p: &Poly, extra: usize) -> Poly {
    p - &geometric_average(p, p.degree().unwrap_or(0) + extra)
}

/// `sum_n E_{2n}/(2n)! alpha^{2n} f^(2n)(h - x)` with the weights above.
fn euler_reflected(f: &Poly, alpha: &GaussianRational, h: &GaussianRational) -> Poly {
    let top = f.degree().unwrap_or(0);
    let alpha_sq = alpha * alpha;
    let mut power = GaussianRational::one();
    let mut acc = Poly::zero();
    for n in 0..=top / 2 {
        let term = f.nth_derivative(2 * n).reflect(h);
        acc = &acc + &term.scale(&(&euler_weight(n) * &power));
        power = &power * &alpha_sq;
    }
    acc
}

/// Closed form of the realization with `c = 1`, `phi = A`, `psi = 0` on
/// `C[x]`:
///
/// * `A1 f = f'`
/// * `A2 f = x f(1-x) - 1/2 sum_n E_{2n}/(2n)! f^(2n)(-x)`
/// * `A3 f = f(1-x)`
pub fn reflection_operator_action(f: &Poly) -> OperatorTriple {
    let one = GaussianRational::one();
    let zero = GaussianRational::zero();
    let a2 = &f.reflect(&one).mulx()
        - &euler_reflected(f, &one, &zero).scale(&GaussianRational::from_ratio(1, 2));
    (f.derivative(), a2, f.reflect(&one))
}

/// Closed form of the realization with `phi = alpha A` and
/// `psi = beta A^s` (`s` odd):
///
/// * `A2 f = c sum_n E_{2n}/(2n)! alpha^{2n} [beta f^(s+2n)(alpha-x) - alpha/2 f^(2n)(-x)] + c x f(alpha-x)`
/// * `A3 f = c f(alpha-x)`
pub fn scaled_reflection_operator_action(
    f: &Poly,
    c: &GaussianRational,
    alpha: &GaussianRational,
    beta: &GaussianRational,
    s: usize,
) -> OperatorTriple {
    let zero = GaussianRational::zero();
    let half_alpha = alpha * &GaussianRational::from_ratio(1, 2);
    let shifted = euler_reflected(&f.nth_derivative(s), alpha, alpha).scale(beta);
    let centered = euler_reflected(f, alpha, &zero).scale(&half_alpha);
    let a2 = &(&shifted - &centered) + &f.reflect(alpha).mulx();
    (f.derivative(), a2.scale(c), f.reflect(alpha).scale(c))
}

/// The same realization as [`reflection_operator_action`] with `E(d/dx)`
/// expanded as a geometric series in `e^{2 d/dx} - 1`:
///
/// `A2 f = x f(1-x) - sum_k (-1)^k / 2^{k+1} sum_l (-1)^l C(k,l) f(2(k-l)+1-x)`,
/// truncated at `k = deg f`.
pub fn geometric_operator_action(f: &Poly) -> OperatorTriple {
    let one = GaussianRational::one();
    let top = f.degree().unwrap_or(0);
    let mut tail = Poly::zero();
    for k in 0..=top {
        let mut w = Rational::new(BigInt::one(), BigInt::from(2).pow(k as u32 + 1));
        if k % 2 == 1 {
            w = -w;
        }
        for l in 0..=k {
            let mut c = &w * Rational::from_integer(binomial(k as u64, l as u64));
            if l % 2 == 1 {
                c = -c;
            }
            let h = GaussianRational::from_int(2 * (k - l) as i64 + 1);
            tail = &tail + &f.reflect(&h).scale_rational(&c);
        }
    }
    let a2 = &f.reflect(&one).mulx() - &tail;
    (f.derivative(), a2, f.reflect(&one))
}
