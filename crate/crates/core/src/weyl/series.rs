use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::aseries::ASeries;
use crate::error::{Error, Result};
use crate::numkit::{binomial, factorial, GaussianRational, Rational};

/// Truncated `(B,A)`-normal-ordered series `sum a_{jk} B^j A^k`.
///
/// Two bookkeeping numbers travel with the coefficients:
///
/// * `dbound`: every coefficient with `j - k > dbound` is zero. On this
///   class products have finite normal-form coefficients and the bound adds
///   under multiplication.
/// * `window`: coefficients with `k <= window` are exact, including the
///   implicit zeros. Nothing is stored beyond the window.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSeries {
    entries: BTreeMap<(usize, usize), GaussianRational>,
    dbound: i64,
    window: usize,
}

impl NormalSeries {
    pub fn zero(window: usize) -> Self {
        NormalSeries {
            entries: BTreeMap::new(),
            dbound: 0,
            window,
        }
    }

    pub fn identity(window: usize) -> Self {
        Self::scalar(GaussianRational::one(), window)
    }

    pub fn scalar(c: GaussianRational, window: usize) -> Self {
        Self::monomial(0, 0, c, window)
    }

    /// `c B^j A^k`, dbound `j - k`. Dropped if `k > window`.
    pub fn monomial(j: usize, k: usize, c: GaussianRational, window: usize) -> Self {
        let mut entries = BTreeMap::new();
        if k <= window && !c.is_zero() {
            entries.insert((j, k), c);
        }
        NormalSeries {
            entries,
            dbound: j as i64 - k as i64,
            window,
        }
    }

    /// The generator `A`, declared exact up to `window`.
    pub fn a(window: usize) -> Self {
        Self::monomial(0, 1, GaussianRational::one(), window)
    }

    /// The generator `B`, declared exact up to `window`.
    pub fn b(window: usize) -> Self {
        Self::monomial(1, 0, GaussianRational::one(), window)
    }

    /// Validating constructor: rejects entries outside the declared support.
    pub fn from_entries<I>(entries: I, dbound: i64, window: usize) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), GaussianRational)>,
    {
        let mut map = BTreeMap::new();
        for ((j, k), c) in entries {
            if c.is_zero() {
                continue;
            }
            if j as i64 - k as i64 > dbound || k > window {
                return Err(Error::OutsideSupport {
                    j,
                    k,
                    dbound,
                    window,
                });
            }
            let slot = map.entry((j, k)).or_insert_with(GaussianRational::zero);
            *slot += &c;
        }
        map.retain(|_, c: &mut GaussianRational| !c.is_zero());
        Ok(NormalSeries {
            entries: map,
            dbound,
            window,
        })
    }

    /// Builds from raw parts, pruning zeros and entries beyond the window.
    /// The caller guarantees the dbound.
    pub(crate) fn from_parts_unchecked(
        mut entries: BTreeMap<(usize, usize), GaussianRational>,
        dbound: i64,
        window: usize,
    ) -> Self {
        entries.retain(|&(_, k), c| k <= window && !c.is_zero());
        debug_assert!(entries.keys().all(|&(j, k)| j as i64 - k as i64 <= dbound));
        NormalSeries {
            entries,
            dbound,
            window,
        }
    }

    /// `T(A,B) = sum_k (-2)^k / k! B^k A^k`, the abstract parity series.
    pub fn t_series(window: usize) -> Self {
        let entries = (0..=window)
            .map(|k| {
                let mut num = BigInt::from(2).pow(k as u32);
                if k % 2 == 1 {
                    num = -num;
                }
                ((k, k), GaussianRational::real(Rational::new(num, factorial(k as u64))))
            })
            .collect();
        Self::from_parts_unchecked(entries, 0, window)
    }

    /// Normal form of `A^i B^j`:
    /// `sum_nu nu! C(i,nu) C(j,nu) B^{j-nu} A^{i-nu}`.
    pub fn reorder_monomial(i: usize, j: usize) -> Self {
        let entries = (0..=i.min(j))
            .map(|nu| {
                let c = contraction_coefficient(i, j, nu);
                ((j - nu, i - nu), GaussianRational::real(Rational::from_integer(c)))
            })
            .collect();
        Self::from_parts_unchecked(entries, j as i64 - i as i64, i)
    }

    /// `sum f_l A^l` as the entries `(0, l)`.
    pub fn lift_a_series(f: &ASeries) -> Self {
        let entries = f.coeffs().map(|(l, c)| ((0, l), c.clone())).collect();
        Self::from_parts_unchecked(entries, 0, f.window())
    }

    pub fn coeff(&self, j: usize, k: usize) -> GaussianRational {
        self.entries
            .get(&(j, k))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GaussianRational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every stored coefficient is zero. Since coefficients up to
    /// the window are exact, this means "zero on the exact window".
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dbound(&self) -> i64 {
        self.dbound
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Drops everything beyond `window` (no-op if already smaller).
    pub fn restrict(&self, window: usize) -> Self {
        let window = window.min(self.window);
        let entries = self
            .entries
            .iter()
            .filter(|(&(_, k), _)| k <= window)
            .map(|(key, c)| (*key, c.clone()))
            .collect();
        NormalSeries {
            entries,
            dbound: self.dbound,
            window,
        }
    }

    /// Re-declares the exact window of a series whose stored entries are
    /// known to be complete, such as a finite polynomial in `A` and `B`.
    /// Entries beyond a smaller window are dropped.
    pub fn declare_window(&self, window: usize) -> Self {
        let mut out = self.restrict(window);
        out.window = window;
        out
    }

    /// Loosens the diagonal bound. A tighter bound than the support allows
    /// is rejected.
    pub fn with_dbound(&self, dbound: i64) -> Result<Self> {
        Self::from_entries(
            self.entries.iter().map(|(key, c)| (*key, c.clone())),
            dbound,
            self.window,
        )
    }

    /// Coefficient-wise equality on the common exact window.
    pub fn eq_on_window(&self, other: &NormalSeries) -> bool {
        let w = self.window.min(other.window);
        self.restrict(w).entries == other.restrict(w).entries
    }

    pub fn add(&self, other: &NormalSeries) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &NormalSeries) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &NormalSeries, negate: bool) -> Self {
        let window = self.window.min(other.window);
        let mut entries = self.restrict(window).entries;
        for (&(j, k), c) in &other.entries {
            if k > window {
                continue;
            }
            let slot = entries.entry((j, k)).or_insert_with(GaussianRational::zero);
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_parts_unchecked(entries, self.dbound.max(other.dbound), window)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let entries = self.entries.iter().map(|(key, v)| (*key, v * c)).collect();
        Self::from_parts_unchecked(entries, self.dbound, self.window)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-GaussianRational::one())
    }

    /// Window of the product `self * other`.
    pub fn product_window(&self, other: &NormalSeries) -> Result<usize> {
        let shift = other.dbound.max(0);
        let k_out = (self.window as i64 - shift).min(other.window as i64);
        if k_out < 0 {
            return Err(Error::WindowUnderflow(format!(
                "product of windows {} and {} with right dbound {} has no exact region",
                self.window, other.window, other.dbound
            )));
        }
        Ok(k_out as usize)
    }

    /// Normal-ordered product.
    ///
    /// `B^j A^k * B^m A^n` contributes `nu! C(k,nu) C(m,nu)` to
    /// `B^{j+m-nu} A^{k+n-nu}`. An output coefficient `(r, s)` only reads
    /// left entries with `k <= s + max(d2, 0)` and right entries with
    /// `n <= s`, so the result is exact for
    /// `s <= min(K1 - max(d2, 0), K2)`.
    pub fn mul(&self, other: &NormalSeries) -> Result<Self> {
        let k_out = self.product_window(other)?;
        let shift = other.dbound.max(0) as usize;
        let mut acc: BTreeMap<(usize, usize), GaussianRational> = BTreeMap::new();
        for (&(j, k), c1) in &self.entries {
            if k > k_out + shift {
                continue;
            }
            for (&(m, n), c2) in &other.entries {
                if n > k_out {
                    continue;
                }
                let nu_hi = k.min(m);
                let nu_lo = (k + n).saturating_sub(k_out);
                if nu_lo > nu_hi {
                    continue;
                }
                let base = c1 * c2;
                for nu in nu_lo..=nu_hi {
                    let term = base.scale_int(&contraction_coefficient(k, m, nu));
                    let slot = acc
                        .entry((j + m - nu, k + n - nu))
                        .or_insert_with(GaussianRational::zero);
                    *slot += &term;
                }
            }
        }
        Ok(Self::from_parts_unchecked(acc, self.dbound + other.dbound, k_out))
    }

    /// `B * self`: shifts every `j` up by one.
    pub fn b_mul(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(&(j, k), c)| ((j + 1, k), c.clone()))
            .collect();
        Self::from_parts_unchecked(entries, self.dbound + 1, self.window)
    }

    /// Substitution `A -> -A`, `B -> -B`.
    pub fn parity_flip(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(&(j, k), c)| ((j, k), if (j + k) % 2 == 1 { -c } else { c.clone() }))
            .collect();
        Self::from_parts_unchecked(entries, self.dbound, self.window)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &NormalSeries) -> Result<Self> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }

    /// `self * other + other * self`.
    pub fn anticommutator(&self, other: &NormalSeries) -> Result<Self> {
        Ok(self.mul(other)?.add(&other.mul(self)?))
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(j, k), c)| json!([j, k, c.to_string()]))
            .collect();
        json!({ "dbound": self.dbound, "window": self.window, "entries": entries })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Format(format!("series JSON: {msg}"));
        let dbound = value
            .get("dbound")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing integer \"dbound\""))?;
        let window = value
            .get("window")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing nonnegative \"window\""))? as usize;
        let raw = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"entries\" array"))?;
        let mut entries = Vec::with_capacity(raw.len());
        for item in raw {
            let triple = item
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| bad("entry must be [j, k, \"coeff\"]"))?;
            let j = triple[0].as_u64().ok_or_else(|| bad("j must be a nonnegative integer"))?;
            let k = triple[1].as_u64().ok_or_else(|| bad("k must be a nonnegative integer"))?;
            let c: GaussianRational = triple[2]
                .as_str()
                .ok_or_else(|| bad("coefficient must be a string"))?
                .parse()?;
            entries.push(((j as usize, k as usize), c));
        }
        Self::from_entries(entries, dbound, window)
    }
}

/// `nu! C(k,nu) C(m,nu)`, the weight of contracting `nu` pairs when moving
/// `A^k` past `B^m`.
pub(crate) fn contraction_coefficient(k: usize, m: usize, nu: usize) -> BigInt {
    if nu == 0 {
        return BigInt::one();
    }
    let falling: BigInt = ((m - nu + 1)..=m).map(BigInt::from).product();
    binomial(k as u64, nu as u64) * falling
}

/// Expression form, highest `(j,k)` first, e.g. `B*A + 1`.
impl fmt::Display for NormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(j, k), c)) in self.entries.iter().rev().enumerate() {
            let mut factors = Vec::new();
            match j {
                0 => {}
                1 => factors.push("B".to_string()),
                _ => factors.push(format!("B^{j}")),
            }
            match k {
                0 => {}
                1 => factors.push("A".to_string()),
                _ => factors.push(format!("A^{k}")),
            }
            crate::cli::write_term(f, c, &factors.join("*"), idx == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::rat;
    use crate::weyl::{normal_order, Word};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn reorder_small_cases() {
        // AB = BA + I
        let ab = NormalSeries::reorder_monomial(1, 1);
        assert_eq!(ab.coeff(1, 1), g(1));
        assert_eq!(ab.coeff(0, 0), g(1));
        assert_eq!(ab.len(), 2);
        // A^2 B = B A^2 + 2A
        let a2b = NormalSeries::reorder_monomial(2, 1);
        assert_eq!(a2b.coeff(1, 2), g(1));
        assert_eq!(a2b.coeff(0, 1), g(2));
        assert_eq!(a2b.len(), 2);
        assert_eq!(a2b.window(), 2);
        assert_eq!(a2b.dbound(), -1);
        // A^2 B^3 = B^3 A^2 + 6 B^2 A + 6 B
        let a2b3 = NormalSeries::reorder_monomial(2, 3);
        assert_eq!(a2b3.coeff(3, 2), g(1));
        assert_eq!(a2b3.coeff(2, 1), g(6));
        assert_eq!(a2b3.coeff(1, 0), g(6));
        assert_eq!(a2b3.len(), 3);
    }

    #[test]
    fn reorder_agrees_with_word_folding() {
        for i in 0..6 {
            for j in 0..6 {
                let mut letters = vec![crate::weyl::Letter::A; i];
                letters.extend(vec![crate::weyl::Letter::B; j]);
                let folded = normal_order(&[Word::new(letters, g(1))]);
                let closed = NormalSeries::reorder_monomial(i, j);
                assert_eq!(folded.entries, closed.entries, "A^{i} B^{j}");
            }
        }
    }

    #[test]
    fn linear_ops() {
        let t = NormalSeries::t_series(6);
        let i = NormalSeries::identity(6);
        assert!(i.sub(&i).is_zero());
        assert!(t.scale(&g(0)).is_zero());
        assert_eq!(t.add(&t), t.scale(&g(2)));
        assert_eq!(t.add(&NormalSeries::t_series(3)).window(), 3);
    }

    #[test]
    fn t_series_entries() {
        assert_eq!(NormalSeries::t_series(0), NormalSeries::identity(0));
        let t = NormalSeries::t_series(5);
        assert_eq!(t.coeff(2, 2), g(2));
        assert_eq!(t.coeff(3, 3), GaussianRational::real(rat(-4, 3)));
        assert_eq!(t.coeff(1, 2), g(0));
        assert_eq!(t.dbound(), 0);
    }

    #[test]
    fn generators_multiply() {
        let w = 4;
        let ab = NormalSeries::a(w).mul(&NormalSeries::b(w)).unwrap();
        assert_eq!(ab.coeff(1, 1), g(1));
        assert_eq!(ab.coeff(0, 0), g(1));
        let comm = NormalSeries::a(w).commutator(&NormalSeries::b(w)).unwrap();
        assert!(comm.eq_on_window(&NormalSeries::identity(w)));
    }

    #[test]
    fn t_squares_to_identity() {
        for k in 1..=10 {
            let t = NormalSeries::t_series(k);
            let tt = t.mul(&t).unwrap();
            assert_eq!(tt.window(), k);
            assert!(tt.eq_on_window(&NormalSeries::identity(k)), "window {k}");
        }
    }

    #[test]
    fn b_mul_and_lift() {
        let b = NormalSeries::identity(3).b_mul();
        assert_eq!(b.coeff(1, 0), g(1));
        assert_eq!(b.dbound(), 1);
        let bt = NormalSeries::t_series(4).b_mul();
        for k in 0..=4 {
            assert!(!bt.coeff(k + 1, k).is_zero());
        }
        let f = ASeries::from_coeffs([(0, g(1)), (1, g(1))], 5);
        let lifted = NormalSeries::lift_a_series(&f);
        assert_eq!(lifted.coeff(0, 0), g(1));
        assert_eq!(lifted.coeff(0, 1), g(1));
        assert_eq!(lifted.len(), 2);
    }

    #[test]
    fn parity_flip_cases() {
        let t = NormalSeries::t_series(6);
        assert_eq!(t.parity_flip(), t);
        assert_eq!(NormalSeries::b(2).parity_flip(), NormalSeries::b(2).neg());
        let s = NormalSeries::reorder_monomial(3, 2);
        assert_eq!(s.parity_flip().parity_flip(), s);
    }

    #[test]
    fn underflow_is_reported() {
        let bt = NormalSeries::t_series(0).b_mul().b_mul();
        let t = NormalSeries::t_series(1);
        assert!(matches!(t.mul(&bt), Err(Error::WindowUnderflow(_))));
    }

    #[test]
    fn bt_product_window_shrinks_by_one() {
        let t = NormalSeries::t_series(8);
        let bt = t.b_mul();
        let prod = t.mul(&bt).unwrap();
        assert_eq!(prod.window(), 7);
        // T (B T) = -B T T = -B on the window
        assert!(prod.eq_on_window(&NormalSeries::b(7).neg()));
    }

    #[test]
    fn json_round_trip() {
        let s = NormalSeries::t_series(3).b_mul().scale(&GaussianRational::i());
        let text = s.to_json().to_string();
        let back = NormalSeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json().to_string(), text);
    }

    #[test]
    fn json_rejects_out_of_support() {
        let v = serde_json::json!({"dbound": 0, "window": 2, "entries": [[2, 1, "1"]]});
        assert!(NormalSeries::from_json(&v).is_err());
        let v = serde_json::json!({"dbound": 0, "window": 2, "entries": [[3, 3, "1"]]});
        assert!(NormalSeries::from_json(&v).is_err());
    }

    #[test]
    fn display_expression_form() {
        let ab = NormalSeries::reorder_monomial(1, 1);
        assert_eq!(ab.to_string(), "B*A + 1");
        assert_eq!(NormalSeries::zero(2).to_string(), "0");
        assert_eq!(NormalSeries::t_series(2).to_string(), "2*B^2*A^2 - 2*B*A + 1");
    }
}
