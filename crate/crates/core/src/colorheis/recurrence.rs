use num_bigint::BigInt;
use num_traits::Zero;

use crate::numkit::{factorial, Rational};

/// Diagonal `b_i = a_{i, i+l-1}` of the two-relation coefficients, obtained
/// by iterating `4 b_i + 4(i+1) b_{i+1} + (i+1)(i+2) b_{i+2} = 0` from
/// `b_0 = c_l`, `b_1 = d_l`. Returns `b_0 ..= b_last`.
///
/// On the `l = 0` diagonal `b_0` is the auxiliary `a_{0,-1} = 0` and the
/// first step is the boundary condition `a_{21} = -2 a_{10}` rather than the
/// recurrence.
pub fn iterate_diagonal(c: &Rational, d: &Rational, l: usize, last: usize) -> Vec<Rational> {
    let mut b = vec![c.clone(), d.clone()];
    while b.len() <= last {
        let i = b.len() - 2;
        let next = if l == 0 && i == 0 {
            -Rational::from_integer(2.into()) * &b[1]
        } else {
            let lhs = Rational::from_integer(4.into()) * &b[i]
                + Rational::from_integer(BigInt::from(4 * (i + 1))) * &b[i + 1];
            -lhs / Rational::from_integer(BigInt::from((i + 1) * (i + 2)))
        };
        b.push(next);
    }
    b.truncate(last + 1);
    b
}

/// `a_{j+1, j+l} = (-2)^j / j! (d_l + 2j/(j+1) c_l)`.
pub fn closed_form(c: &Rational, d: &Rational, j: usize) -> Rational {
    let mut w = Rational::new(BigInt::from(2).pow(j as u32), factorial(j as u64));
    if j % 2 == 1 {
        w = -w;
    }
    let ratio = Rational::new(BigInt::from(2 * j), BigInt::from(j + 1));
    w * (d + ratio * c)
}

/// True iff iterating the recurrence from the boundary data reproduces the
/// closed form for all `j <= J`, `l <= L`. Sequences shorter than `L + 1`
/// are padded with zeros. `c_0` must be zero.
pub fn recurrence_closed_form_check(c: &[Rational], d: &[Rational], j_max: usize, l_max: usize) -> bool {
    let at = |s: &[Rational], i: usize| s.get(i).cloned().unwrap_or_else(Rational::zero);
    if !at(c, 0).is_zero() {
        return false;
    }
    (0..=l_max).all(|l| {
        let (cl, dl) = (at(c, l), at(d, l));
        let b = iterate_diagonal(&cl, &dl, l, j_max + 1);
        (0..=j_max).all(|j| b[j + 1] == closed_form(&cl, &dl, j))
    })
}
