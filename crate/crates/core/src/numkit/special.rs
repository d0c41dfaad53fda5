use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::rational::Rational;
use crate::polyop::Poly;

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

// Prefix caches. Every fill computes the same values, so concurrent callers
// racing on the lock observe identical results.
static EULER: LazyLock<Mutex<Vec<Rational>>> = LazyLock::new(|| Mutex::new(Vec::new()));
static BERNOULLI: LazyLock<Mutex<Vec<Rational>>> = LazyLock::new(|| Mutex::new(Vec::new()));

/// Euler number `E_n` (integer valued; zero at odd `n`).
///
/// Filled from `sum_k C(2m, 2k) E_{2k} = 0` for `m >= 1`, which is the
/// coefficient form of `E(t) cosh(t) = 1`.
pub fn euler_number(n: usize) -> Rational {
    let mut cache = EULER.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let m = cache.len();
        let value = if m == 0 {
            Rational::one()
        } else if m % 2 == 1 {
            Rational::zero()
        } else {
            let mut acc = Rational::zero();
            for k in (0..m).step_by(2) {
                acc += Rational::from_integer(binomial(m as u64, k as u64)) * &cache[k];
            }
            -acc
        };
        cache.push(value);
    }
    cache[n].clone()
}

/// Bernoulli number `B_n` with the convention `B_1 = -1/2`.
///
/// Filled from `sum_{k<=m} C(m+1, k) B_k = 0` for `m >= 1`.
pub fn bernoulli_number(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let m = cache.len();
        let value = if m == 0 {
            Rational::one()
        } else if m > 1 && m % 2 == 1 {
            Rational::zero()
        } else {
            let mut acc = Rational::zero();
            for (k, b) in cache.iter().enumerate() {
                acc += Rational::from_integer(binomial(m as u64 + 1, k as u64)) * b;
            }
            -acc / Rational::from_integer(BigInt::from(m + 1))
        };
        cache.push(value);
    }
    cache[n].clone()
}

/// Euler polynomial `E_k(x)`, generating function `2 e^{xt} / (e^t + 1)`.
///
/// Uses `E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x)`, obtained by
/// multiplying the generating function through by `e^t + 1`. It does not
/// read the Euler number cache.
pub fn euler_polynomial(k: usize) -> Poly {
    let half = GaussianRational::from_ratio(1, 2);
    let mut polys: Vec<Poly> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut p = Poly::monomial(n, GaussianRational::one());
        for (j, prev) in polys.iter().enumerate() {
            let c = GaussianRational::real(Rational::from_integer(binomial(n as u64, j as u64)));
            p = &p - &prev.scale(&(&c * &half));
        }
        polys.push(p);
    }
    polys.pop().expect("at least one polynomial")
}

/// Bernoulli polynomial `B_k(x) = sum_j C(k,j) B_j x^{k-j}`.
pub fn bernoulli_polynomial(k: usize) -> Poly {
    let coeffs = (0..=k)
        .map(|deg| {
            let j = k - deg;
            GaussianRational::real(
                Rational::from_integer(binomial(k as u64, j as u64)) * bernoulli_number(j),
            )
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Stirling number of the second kind via the explicit alternating sum
/// `S(m,k) = 1/k! sum_j (-1)^{k-j} C(k,j) j^m`, with `S(0,0) = 1` and
/// `S(0,k) = 0` for `k >= 1`.
pub fn stirling2(m: u64, k: u64) -> BigInt {
    if m == 0 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if k > m {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j) * BigInt::from(j).pow(m as u32);
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / factorial(k)
}

/// Stirling numbers of the second kind by `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2_triangle(m: u64, k: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let k = k as usize;
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for n in 1..=m as usize {
        for j in (1..=k.min(n)).rev() {
            row[j] = &row[j] * BigInt::from(j) + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

fn stirling_weight(k: u64) -> Rational {
    // (-1)^k k! / 2^k
    let mut w = Rational::new(factorial(k), BigInt::from(2).pow(k as u32));
    if k % 2 == 1 {
        w = -w;
    }
    w
}

/// `sum_{k=0}^{nu} (-1)^k k! 2^{-k} S(nu,k)` with the `k = 0` weight taken
/// literally as 1.
pub fn stirling_alternating_sum(nu: u64) -> Rational {
    (0..=nu)
        .map(|k| stirling_weight(k) * Rational::from_integer(stirling2(nu, k)))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `g_nu = sum_k S(nu,k) f_k` with `f_k = (-1)^k k! / 2^k` for `k >= 1` and
/// `f_0 = 0`. The exponential generating function of `g` is odd, so `g_nu`
/// vanishes at every even `nu`, including `nu = 0`.
pub fn stirling_transform_g(nu: u64) -> Rational {
    (1..=nu)
        .map(|k| stirling_weight(k) * Rational::from_integer(stirling2(nu, k)))
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::{int, rat};

    #[test]
    fn binomial_cases() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn euler_numbers_small() {
        assert_eq!(euler_number(0), int(1));
        assert_eq!(euler_number(2), int(-1));
        assert_eq!(euler_number(4), int(5));
        assert_eq!(euler_number(6), int(-61));
        assert_eq!(euler_number(1), int(0));
        assert_eq!(euler_number(3), int(0));
    }

    #[test]
    fn bernoulli_numbers_small() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
    }

    #[test]
    fn low_degree_polynomials() {
        let g = GaussianRational::from_ratio;
        assert_eq!(euler_polynomial(0), Poly::from_coeffs(vec![g(1, 1)]));
        assert_eq!(euler_polynomial(1), Poly::from_coeffs(vec![g(-1, 2), g(1, 1)]));
        assert_eq!(euler_polynomial(2), Poly::from_coeffs(vec![g(0, 1), g(-1, 1), g(1, 1)]));
        assert_eq!(
            euler_polynomial(3),
            Poly::from_coeffs(vec![g(1, 4), g(0, 1), g(-3, 2), g(1, 1)])
        );
        assert_eq!(bernoulli_polynomial(1), Poly::from_coeffs(vec![g(-1, 2), g(1, 1)]));
        assert_eq!(
            bernoulli_polynomial(2),
            Poly::from_coeffs(vec![g(1, 6), g(-1, 1), g(1, 1)])
        );
        assert_eq!(
            bernoulli_polynomial(3),
            Poly::from_coeffs(vec![g(0, 1), g(1, 2), g(-3, 2), g(1, 1)])
        );
    }

    #[test]
    fn euler_numbers_from_polynomials_at_half() {
        let half = GaussianRational::from_ratio(1, 2);
        for k in 0..=16usize {
            let at_half = euler_polynomial(k).eval(&half);
            let scaled = at_half.scale_rational(&Rational::from_integer(BigInt::from(2).pow(k as u32)));
            assert_eq!(scaled, GaussianRational::real(euler_number(k)), "k = {k}");
        }
    }

    #[test]
    fn bernoulli_polynomial_difference() {
        // B_n(x+1) - B_n(x) = n x^{n-1}
        for n in 1..=12usize {
            let b = bernoulli_polynomial(n);
            let diff = &b.shift(&GaussianRational::one()) - &b;
            assert_eq!(diff, Poly::monomial(n - 1, GaussianRational::from_int(n as i64)));
        }
    }

    #[test]
    fn stirling_cases() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(0, 3), BigInt::zero());
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(2, 5), BigInt::zero());
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(4, 0), BigInt::zero());
    }

    #[test]
    fn stirling_formula_matches_triangle() {
        for m in 0..=15 {
            for k in 0..=17 {
                assert_eq!(stirling2(m, k), stirling2_triangle(m, k), "S({m},{k})");
            }
        }
    }

    #[test]
    fn stirling_sums_at_zero() {
        // literal k = 0 weight: S(0,0) * 1 = 1
        assert_eq!(stirling_alternating_sum(0), int(1));
        // with f_0 = 0 the transform vanishes at 0 as well
        assert_eq!(stirling_transform_g(0), int(0));
        for nu in (2..=12).step_by(2) {
            assert_eq!(stirling_alternating_sum(nu), int(0));
            assert_eq!(stirling_transform_g(nu), int(0));
        }
        // odd values survive: g_1 = -1/2
        assert_eq!(stirling_transform_g(1), rat(-1, 2));
    }
}
