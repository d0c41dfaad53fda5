use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::numkit::{euler_number, factorial, GaussianRational, Rational};

/// Truncated power series `sum f_l A^l` in `A` alone, exact for degrees up
/// to `window`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASeries {
    coeffs: BTreeMap<usize, GaussianRational>,
    window: usize,
    odd: bool,
}

impl ASeries {
    pub fn zero(window: usize) -> Self {
        ASeries {
            coeffs: BTreeMap::new(),
            window,
            odd: false,
        }
    }

    pub fn one(window: usize) -> Self {
        Self::monomial(0, GaussianRational::one(), window)
    }

    /// `c A^deg`, dropped if `deg > window`.
    pub fn monomial(deg: usize, c: GaussianRational, window: usize) -> Self {
        Self::from_coeffs([(deg, c)], window)
    }

    /// Sums repeated degrees; drops zeros and degrees beyond the window.
    pub fn from_coeffs<I>(coeffs: I, window: usize) -> Self
    where
        I: IntoIterator<Item = (usize, GaussianRational)>,
    {
        let mut map: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (deg, c) in coeffs {
            if deg <= window {
                *map.entry(deg).or_insert_with(GaussianRational::zero) += &c;
            }
        }
        Self::from_map(map, window)
    }

    fn from_map(mut coeffs: BTreeMap<usize, GaussianRational>, window: usize) -> Self {
        coeffs.retain(|&deg, c| deg <= window && !c.is_zero());
        ASeries {
            coeffs,
            window,
            odd: false,
        }
    }

    /// Parses the compact literal `deg:coeff,deg:coeff`; the empty string is
    /// the zero series.
    pub fn parse_pairs(text: &str, window: usize) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (deg, coeff) = item
                .split_once(':')
                .ok_or_else(|| Error::Format(format!("expected deg:coeff, got {item:?}")))?;
            let deg: usize = deg
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("bad degree in {item:?}")))?;
            pairs.push((deg, coeff.parse::<GaussianRational>()?));
        }
        Ok(Self::from_coeffs(pairs, window))
    }

    /// Validates that every even-degree coefficient vanishes and flags the
    /// series as odd.
    pub fn into_odd(mut self) -> Result<Self> {
        if let Some(&degree) = self.coeffs.keys().find(|&&d| d % 2 == 0) {
            return Err(Error::NotOddSeries { degree });
        }
        self.odd = true;
        Ok(self)
    }

    /// Flagged odd (validated at construction).
    pub fn is_flagged_odd(&self) -> bool {
        self.odd
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.keys().all(|d| d % 2 == 1)
    }

    pub fn coeff(&self, deg: usize) -> GaussianRational {
        self.coeffs
            .get(&deg)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Largest stored degree.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn restrict(&self, window: usize) -> Self {
        let window = window.min(self.window);
        let mut out = Self::from_map(self.coeffs.clone(), window);
        out.odd = self.odd;
        out
    }

    /// Re-declares the window of a series known to be a polynomial.
    pub fn declare_window(&self, window: usize) -> Self {
        let mut out = Self::from_map(self.coeffs.clone(), window);
        out.odd = self.odd;
        out
    }

    pub fn add(&self, other: &ASeries) -> Self {
        let window = self.window.min(other.window);
        let mut map = self.coeffs.clone();
        for (&d, c) in &other.coeffs {
            *map.entry(d).or_insert_with(GaussianRational::zero) += c;
        }
        Self::from_map(map, window)
    }

    pub fn sub(&self, other: &ASeries) -> Self {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::from_map(self.coeffs.iter().map(|(&d, v)| (d, v * c)).collect(), self.window);
        out.odd = self.odd;
        out
    }

    pub fn mul(&self, other: &ASeries) -> Self {
        let window = self.window.min(other.window);
        let mut map: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (&d1, c1) in &self.coeffs {
            for (&d2, c2) in &other.coeffs {
                if d1 + d2 > window {
                    break;
                }
                *map.entry(d1 + d2).or_insert_with(GaussianRational::zero) += &(c1 * c2);
            }
        }
        Self::from_map(map, window)
    }

    /// `f(-A)`.
    pub fn neg_arg(&self) -> Self {
        let mut out = Self::from_map(
            self.coeffs
                .iter()
                .map(|(&d, c)| (d, if d % 2 == 1 { -c } else { c.clone() }))
                .collect(),
            self.window,
        );
        out.odd = self.odd;
        out
    }

    /// `f'(A)`, exact to `window - 1`.
    pub fn derivative(&self) -> Result<Self> {
        if self.window == 0 {
            return Err(Error::WindowUnderflow(
                "derivative of a series exact only at degree 0".into(),
            ));
        }
        let map = self
            .coeffs
            .iter()
            .filter(|(&d, _)| d > 0)
            .map(|(&d, c)| (d - 1, c.scale_int(&BigInt::from(d))))
            .collect();
        Ok(Self::from_map(map, self.window - 1))
    }

    /// `outer(inner(A))` by Horner's rule.
    ///
    /// Requires a zero constant term in `inner` unless `outer` is constant;
    /// then degree `d` of the result only reads degrees `<= d` of both, so
    /// the window is the smaller of the two.
    pub fn compose(outer: &ASeries, inner: &ASeries) -> Result<Self> {
        let window = outer.window.min(inner.window);
        let outer_degree = outer.max_degree().unwrap_or(0);
        if outer_degree == 0 {
            return Ok(outer.restrict(window));
        }
        if !inner.coeff(0).is_zero() {
            return Err(Error::CompositionConstantTerm);
        }
        let inner = inner.restrict(window);
        let mut acc = ASeries::zero(window);
        for deg in (0..=outer_degree.min(window)).rev() {
            acc = acc.mul(&inner).add(&ASeries::monomial(0, outer.coeff(deg), window));
        }
        Ok(acc)
    }

    /// `sum_n t^n / n!` to `window`.
    pub fn exp_series(window: usize) -> Self {
        Self::from_coeffs(
            (0..=window).map(|n| (n, inverse_factorial(n))),
            window,
        )
    }

    /// `sum_n t^{2n} / (2n)!` to `window`.
    pub fn cosh_series(window: usize) -> Self {
        Self::from_coeffs(
            (0..=window).step_by(2).map(|n| (n, inverse_factorial(n))),
            window,
        )
    }

    /// `E(t) = sum_n E_{2n} t^{2n} / (2n)!`, the reciprocal of `cosh`.
    pub fn euler_series(window: usize) -> Self {
        Self::from_coeffs(
            (0..=window).step_by(2).map(|n| {
                (
                    n,
                    GaussianRational::real(euler_number(n) / Rational::from_integer(factorial(n as u64))),
                )
            }),
            window,
        )
    }

    /// `e^{f(A)}`.
    pub fn a_exp(f: &ASeries) -> Result<Self> {
        Self::compose(&Self::exp_series(f.window), f)
    }

    /// `cosh(f(A))`.
    pub fn a_cosh(f: &ASeries) -> Result<Self> {
        Self::compose(&Self::cosh_series(f.window), f)
    }

    /// `E(f(A))`.
    pub fn euler_e(f: &ASeries) -> Result<Self> {
        Self::compose(&Self::euler_series(f.window), f)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Map<String, Value> = self
            .coeffs
            .iter()
            .map(|(d, c)| (d.to_string(), Value::String(c.to_string())))
            .collect();
        let mut obj = Map::new();
        obj.insert("window".into(), Value::from(self.window));
        obj.insert("coeffs".into(), Value::Object(coeffs));
        if self.odd {
            obj.insert("odd".into(), Value::Bool(true));
        }
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Format(format!("A-series JSON: {msg}"));
        let window = value
            .get("window")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing nonnegative \"window\""))? as usize;
        let raw = value
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing \"coeffs\" object"))?;
        let mut coeffs = BTreeMap::new();
        for (key, c) in raw {
            let deg: usize = key.parse().map_err(|_| bad("degree keys must be integers"))?;
            if deg > window {
                return Err(bad("degree beyond window"));
            }
            let c: GaussianRational = c
                .as_str()
                .ok_or_else(|| bad("coefficient must be a string"))?
                .parse()?;
            coeffs.insert(deg, c);
        }
        let series = Self::from_map(coeffs, window);
        match value.get("odd") {
            None | Some(Value::Bool(false)) => Ok(series),
            Some(Value::Bool(true)) => series.into_odd(),
            Some(_) => Err(bad("\"odd\" must be a boolean")),
        }
    }
}

fn inverse_factorial(n: usize) -> GaussianRational {
    GaussianRational::real(Rational::new(BigInt::one(), factorial(n as u64)))
}

/// Compact literal form, `deg:coeff` pairs in increasing degree.
impl fmt::Display for ASeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratio(n, d)
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(ASeries::a_exp(&ASeries::zero(6)).unwrap(), ASeries::one(6));
    }

    #[test]
    fn euler_series_at_identity() {
        let a = ASeries::monomial(1, g(1, 1), 4);
        let e = ASeries::euler_e(&a).unwrap();
        // E_0 = 1, E_2 = -1, E_4 = 5
        let expected = ASeries::from_coeffs([(0, g(1, 1)), (2, g(-1, 2)), (4, g(5, 24))], 4);
        assert_eq!(e, expected);
    }

    #[test]
    fn constant_term_is_rejected() {
        let f = ASeries::from_coeffs([(0, g(1, 1)), (1, g(1, 1))], 4);
        assert_eq!(ASeries::a_exp(&f), Err(Error::CompositionConstantTerm));
        // constant outer is fine
        assert!(ASeries::compose(&ASeries::one(4), &f).is_ok());
    }

    #[test]
    fn derivative_window_and_values() {
        let f = ASeries::from_coeffs([(0, g(3, 1)), (3, g(1, 2))], 5);
        let d = f.derivative().unwrap();
        assert_eq!(d.window(), 4);
        assert_eq!(d, ASeries::monomial(2, g(3, 2), 4));
        assert!(ASeries::one(0).derivative().is_err());
    }

    #[test]
    fn oddness_validation() {
        let even = ASeries::from_coeffs([(1, g(1, 1)), (2, g(1, 1))], 5);
        assert_eq!(even.into_odd(), Err(Error::NotOddSeries { degree: 2 }));
        let odd = ASeries::from_coeffs([(1, g(1, 1)), (3, g(1, 1))], 5).into_odd().unwrap();
        assert!(odd.is_flagged_odd());
        assert_eq!(odd.neg_arg(), odd.scale(&g(-1, 1)));
    }

    #[test]
    fn pair_literal() {
        let f = ASeries::parse_pairs("1:1,3:-1/2", 6).unwrap();
        assert_eq!(f, ASeries::from_coeffs([(1, g(1, 1)), (3, g(-1, 2))], 6));
        assert_eq!(f.to_string(), "1:1,3:-1/2");
        assert!(ASeries::parse_pairs("", 6).unwrap().is_zero());
        assert!(ASeries::parse_pairs("1", 6).is_err());
        assert!(ASeries::parse_pairs("x:1", 6).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = ASeries::parse_pairs("1:1/3,5:i", 7).unwrap().into_odd().unwrap();
        let text = f.to_json().to_string();
        assert_eq!(text, r#"{"window":7,"coeffs":{"1":"1/3","5":"1*i"},"odd":true}"#);
        let back = ASeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, f);
        let bad = serde_json::json!({"window": 3, "coeffs": {"2": "1"}, "odd": true});
        assert!(ASeries::from_json(&bad).is_err());
    }

    fn arb_odd(window: usize) -> impl Strategy<Value = ASeries> {
        proptest::collection::vec((-9i64..=9, 1i64..=9), 3).prop_map(move |cs| {
            ASeries::from_coeffs(
                cs.into_iter().enumerate().map(|(i, (n, d))| (2 * i + 1, g(n, d))),
                window,
            )
        })
    }

    proptest! {
        #[test]
        fn cosh_times_euler_is_one(f in arb_odd(10)) {
            let prod = ASeries::a_cosh(&f).unwrap().mul(&ASeries::euler_e(&f).unwrap());
            prop_assert_eq!(prod, ASeries::one(10));
        }

        #[test]
        fn exp_is_multiplicative(f in arb_odd(8), h in arb_odd(8)) {
            let lhs = ASeries::a_exp(&f.add(&h)).unwrap();
            let rhs = ASeries::a_exp(&f).unwrap().mul(&ASeries::a_exp(&h).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
