use std::collections::BTreeMap;

use num_traits::Zero;

use crate::colorheis::Realization;
use crate::error::{Error, Result};
use crate::numkit::GaussianRational;
use crate::weyl::NormalSeries;

use super::poly::Poly;

/// `sum a_{jk} x^j p^{(k)}(x)`: the series acting on `C[x]` with `A = d/dx`
/// and `B = x`.
///
/// Only terms with `k <= deg p` contribute, so the series must be exact up
/// to `deg p`.
pub fn apply_series(s: &NormalSeries, p: &Poly) -> Result<Poly> {
    let Some(deg) = p.degree() else {
        return Ok(Poly::zero());
    };
    if s.window() < deg {
        return Err(Error::WindowUnderflow(format!(
            "series exact to A^{} applied to a polynomial of degree {deg}",
            s.window()
        )));
    }
    let mut by_k: BTreeMap<usize, Vec<(usize, &GaussianRational)>> = BTreeMap::new();
    for (&(j, k), c) in s.entries() {
        if k <= deg {
            by_k.entry(k).or_default().push((j, c));
        }
    }
    let mut out: Vec<GaussianRational> = Vec::new();
    let mut derivative = p.clone();
    let mut order = 0;
    for (k, terms) in by_k {
        while order < k {
            derivative = derivative.derivative();
            order += 1;
        }
        for (j, c) in terms {
            for (n, d) in derivative.coeffs().iter().enumerate() {
                if out.len() <= n + j {
                    out.resize(n + j + 1, GaussianRational::zero());
                }
                out[n + j] += &(c * d);
            }
        }
    }
    Ok(Poly::from_coeffs(out))
}

/// Residuals of the three relations applied to `p`:
/// `{A1,A2}p - A3 p`, `{A1,A3}p` and `{A2,A3}p`.
pub fn action_residuals(
    a1: &NormalSeries,
    a2: &NormalSeries,
    a3: &NormalSeries,
    p: &Poly,
) -> Result<[Poly; 3]> {
    let ap = |s: &NormalSeries, q: &Poly| apply_series(s, q);
    let anti = |x: &NormalSeries, y: &NormalSeries| -> Result<Poly> {
        Ok(&ap(x, &ap(y, p)?)? + &ap(y, &ap(x, p)?)?)
    };
    Ok([
        &anti(a1, a2)? - &ap(a3, p)?,
        anti(a1, a3)?,
        anti(a2, a3)?,
    ])
}

/// True iff all three relations hold on every monomial `x^n`, `n <= maxdeg`.
///
/// `A2` raises degree by one, so the realization needs a window of at least
/// `maxdeg + 1`.
pub fn realization_action_check(r: &Realization, maxdeg: usize) -> Result<bool> {
    for n in 0..=maxdeg {
        let p = Poly::monomial(n, GaussianRational::from_int(1));
        if action_residuals(&r.a1, &r.a2, &r.a3, &p)?
            .iter()
            .any(|res| !res.is_zero())
        {
            return Ok(false);
        }
    }
    Ok(true)
}
