use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numkit::{GaussianRational, Rational};

/// Dense univariate polynomial over `Q(i)`; `coeffs[n]` is the coefficient
/// of `x^n`. Trailing zeros are always pruned, so the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^n`.
    pub fn monomial(n: usize, c: GaussianRational) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); n + 1];
        coeffs[n] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> GaussianRational {
        self.coeffs.get(n).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, at: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.scale_int(&BigInt::from(n)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Poly {
        if order >= self.coeffs.len() {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(order)
                .map(|(n, c)| {
                    let falling: BigInt = ((n - order + 1)..=n).map(BigInt::from).product();
                    c.scale_int(&falling)
                })
                .collect(),
        )
    }

    /// Multiplication by `x`.
    pub fn mulx(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(GaussianRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `p(x + h)` via the Taylor expansion `sum_n p^(n)(x) h^n / n!`.
    pub fn shift(&self, h: &GaussianRational) -> Poly {
        let mut acc = Poly::zero();
        let mut derivative = self.clone();
        let mut weight = GaussianRational::one();
        let mut n = 0i64;
        while !derivative.is_zero() {
            acc = &acc + &derivative.scale(&weight);
            n += 1;
            derivative = derivative.derivative();
            weight = &(&weight * h) * &GaussianRational::from_ratio(1, n);
        }
        acc
    }

    /// `p(-x)`.
    pub fn parity(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(h - x)`.
    pub fn reflect(&self, h: &GaussianRational) -> Poly {
        self.shift(h).parity()
    }

    /// `(p_even, p_odd)` with `p = p_even + p_odd`.
    pub fn even_odd_split(&self) -> (Poly, Poly) {
        let pick = |parity: usize| {
            Poly::from_coeffs(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| {
                        if n % 2 == parity {
                            c.clone()
                        } else {
                            GaussianRational::zero()
                        }
                    })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        self.scale(&GaussianRational::real(r.clone()))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

/// Decreasing degree, terms `c*x^k`; `0` for the zero polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let monomial = match n {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{n}"),
            };
            crate::cli::write_term(f, c, &monomial, first)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let expr = crate::cli::parse_expr(s)?;
        crate::cli::expr_to_poly(&expr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn basic_operations() {
        assert_eq!(p("x^3").derivative(), p("3*x^2"));
        assert_eq!(p("x^2").shift(&GaussianRational::one()), p("x^2 + 2*x + 1"));
        assert_eq!(p("x^3 - x^2").parity(), p("-x^3 - x^2"));
        assert_eq!(p("x^5 + x").nth_derivative(3), p("60*x^2"));
        assert_eq!(p("x^2 + 1").reflect(&GaussianRational::one()), p("x^2 - 2*x + 2"));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p("2*x - 2*x"), Poly::zero());
    }

    #[test]
    fn split_recombines() {
        let f = p("3*x^4 - x^3 + 1/2*x + 7");
        let (even, odd) = f.even_odd_split();
        assert_eq!(&even + &odd, f);
        assert_eq!(even.parity(), even);
        assert_eq!(odd.parity(), -&odd);
    }

    #[test]
    fn display_decreasing_degree() {
        assert_eq!(p("1 + x^2 - 1/2*x").to_string(), "x^2 - 1/2*x + 1");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(p("(1+i)*x").to_string(), "(1+1*i)*x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn degree_of_product_adds() {
        let a = p("x^3 + 2");
        let b = p("i*x^2 - x");
        assert_eq!((&a * &b).degree(), Some(5));
    }
}
