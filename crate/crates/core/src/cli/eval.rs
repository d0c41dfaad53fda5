use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::parse::{Base, Expr, Factor, Sign, Term};
use crate::error::{Error, Result};
use crate::numkit::{GaussianRational, Rational};
use crate::polyop::Poly;
use crate::weyl::{Letter, Word};

fn literal(base: &Base) -> Option<GaussianRational> {
    match base {
        Base::I => Some(GaussianRational::i()),
        Base::Number { num, den } => {
            let num = BigInt::from(num.clone());
            let den = den.clone().map_or_else(BigInt::one, BigInt::from);
            if den.is_zero() {
                return None;
            }
            Some(GaussianRational::real(Rational::new(num, den)))
        }
        _ => None,
    }
}

fn zero_denominator(base: &Base) -> bool {
    matches!(base, Base::Number { den: Some(d), .. } if d.is_zero())
}

/// Expands an expression in `A`, `B` into a sum of words, keeping the
/// written order of the letters.
pub fn expr_to_words(expr: &Expr) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    for (sign, term) in &expr.terms {
        for mut w in term_to_words(term)? {
            if *sign == Sign::Minus {
                w.coefficient = -w.coefficient;
            }
            out.push(w);
        }
    }
    Ok(out)
}

fn term_to_words(term: &Term) -> Result<Vec<Word>> {
    let mut acc = vec![Word::scalar(GaussianRational::one())];
    for factor in &term.factors {
        let f = factor_to_words(factor)?;
        acc = acc
            .iter()
            .flat_map(|a| f.iter().map(move |b| a.concat(b)))
            .collect();
    }
    Ok(acc)
}

fn factor_to_words(factor: &Factor) -> Result<Vec<Word>> {
    let single = match &factor.base {
        Base::A => vec![Word::new(vec![Letter::A], GaussianRational::one())],
        Base::B => vec![Word::new(vec![Letter::B], GaussianRational::one())],
        Base::X => {
            return Err(Error::Format(
                "x is a polynomial variable; use A and B in operator expressions".into(),
            ))
        }
        Base::Paren(inner) => expr_to_words(inner)?,
        other if zero_denominator(other) => return Err(Error::Number(other.to_string())),
        other => vec![Word::scalar(literal(other).expect("literal base"))],
    };
    let mut acc = vec![Word::scalar(GaussianRational::one())];
    for _ in 0..factor.exp.unwrap_or(1) {
        acc = acc
            .iter()
            .flat_map(|a| single.iter().map(move |b| a.concat(b)))
            .collect();
    }
    Ok(acc)
}

/// Evaluates an expression in `x` to a polynomial.
pub fn expr_to_poly(expr: &Expr) -> Result<Poly> {
    let mut acc = Poly::zero();
    for (sign, term) in &expr.terms {
        let mut t = Poly::one();
        for factor in &term.factors {
            t = &t * &factor_to_poly(factor)?;
        }
        acc = match sign {
            Sign::Plus => &acc + &t,
            Sign::Minus => &acc - &t,
        };
    }
    Ok(acc)
}

fn factor_to_poly(factor: &Factor) -> Result<Poly> {
    let base = match &factor.base {
        Base::X => Poly::x(),
        Base::A | Base::B => {
            return Err(Error::Format(
                "A and B are operators; polynomials are written in x".into(),
            ))
        }
        Base::Paren(inner) => expr_to_poly(inner)?,
        other if zero_denominator(other) => return Err(Error::Number(other.to_string())),
        other => Poly::constant(literal(other).expect("literal base")),
    };
    let mut acc = Poly::one();
    for _ in 0..factor.exp.unwrap_or(1) {
        acc = &acc * &base;
    }
    Ok(acc)
}

/// Writes one term `c*monomial` of a sum. Negative real or negative
/// imaginary coefficients become a `-` sign; a unit coefficient is omitted
/// unless the monomial is empty; compound coefficients are parenthesized.
pub fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &GaussianRational,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    let negative = (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative());
    let magnitude = if negative { -c } else { c.clone() };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let coeff = if magnitude.is_compound() {
        format!("({magnitude})")
    } else {
        magnitude.to_string()
    };
    match (monomial.is_empty(), magnitude.is_one()) {
        (true, _) => write!(f, "{coeff}"),
        (false, true) => write!(f, "{monomial}"),
        (false, false) => write!(f, "{coeff}*{monomial}"),
    }
}
