use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::linalg::{nullspace, rank, Matrix};
use crate::error::{Error, Result};
use crate::numkit::Rational;
use crate::weyl::{normal_order, Letter, Word};
use crate::GaussianRational;

/// Largest bidegree accepted by [`polynomial_nogo`].
pub const NOGO_BOUND: usize = 8;

/// Result of solving `A2 A^2 + 2 A A2 A + A^2 A2 = 0` for a polynomial
/// `A2 = sum_{j<=M, k<=N} a_{jk} B^j A^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoGoReport {
    pub m: usize,
    pub n: usize,
    pub system_rows: usize,
    pub system_cols: usize,
    pub nullity: usize,
    /// Kernel basis, each element as an `(M+1) x (N+1)` coefficient matrix.
    pub basis: Vec<Vec<Vec<Rational>>>,
}

impl NoGoReport {
    pub fn to_json(&self) -> Value {
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|m| {
                Value::Array(
                    m.iter()
                        .map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect()))
                        .collect(),
                )
            })
            .collect();
        json!({
            "m": self.m,
            "n": self.n,
            "system_rows": self.system_rows,
            "system_cols": self.system_cols,
            "nullity": self.nullity,
            "basis": basis,
        })
    }
}

/// The linear system: one row per normal-ordered monomial `B^r A^s` of
/// `Q`, one column per unknown `a_{jk}` (column `j*(N+1) + k`).
pub struct NoGoSystem {
    pub m: usize,
    pub n: usize,
    pub rows: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl NoGoSystem {
    pub fn build(m: usize, n: usize) -> Self {
        let cols = (m + 1) * (n + 1);
        let mut rows: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        let one = GaussianRational::one();
        for j in 0..=m {
            for k in 0..=n {
                let a2 = |extra_a: usize| {
                    let mut letters = vec![Letter::B; j];
                    letters.extend(vec![Letter::A; k + extra_a]);
                    letters
                };
                let with_prefix = |prefix: usize, extra_a: usize| {
                    let mut letters = vec![Letter::A; prefix];
                    letters.extend(a2(extra_a));
                    letters
                };
                let q = normal_order(&[
                    Word::new(a2(2), one.clone()),
                    Word::new(with_prefix(1, 1), GaussianRational::from_int(2)),
                    Word::new(with_prefix(2, 0), one.clone()),
                ]);
                let col = j * (n + 1) + k;
                for (&key, c) in q.entries() {
                    debug_assert!(c.is_real());
                    rows.entry(key).or_insert_with(|| vec![Rational::zero(); cols])[col] = c.re.clone();
                }
            }
        }
        NoGoSystem { m, n, rows }
    }

    pub fn cols(&self) -> usize {
        (self.m + 1) * (self.n + 1)
    }

    pub fn matrix(&self) -> Matrix {
        self.rows.values().cloned().collect()
    }

    fn unit(&self, j: usize, k: usize, scale: i64) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.cols()];
        v[j * (self.n + 1) + k] = Rational::from_integer(scale.into());
        v
    }

    /// True when `a_{jk} = 0` follows from the system.
    pub fn implies_zero(&self, j: usize, k: usize) -> bool {
        let mut m = self.matrix();
        let before = rank(&m);
        m.push(self.unit(j, k, 1));
        rank(&m) == before
    }

    /// The boundary equations read off the top monomials: the coefficient
    /// of `B^j A^{N+2}` is `4 a_{jN}` and that of `B^M A^{k+2}` is
    /// `4 a_{Mk}`. Checks that the generated system contains exactly these
    /// rows and that it implies each `a_{jN} = 0`, `a_{Mk} = 0`.
    pub fn boundary_rows_hold(&self) -> bool {
        let (m, n) = (self.m, self.n);
        let top_a = (0..=m).all(|j| {
            self.rows.get(&(j, n + 2)) == Some(&self.unit(j, n, 4)) && self.implies_zero(j, n)
        });
        let top_b = (0..=n).all(|k| {
            self.rows.get(&(m, k + 2)) == Some(&self.unit(m, k, 4)) && self.implies_zero(m, k)
        });
        top_a && top_b
    }
}

pub fn polynomial_nogo(m: usize, n: usize) -> Result<NoGoReport> {
    polynomial_nogo_bounded(m, n, NOGO_BOUND)
}

pub fn polynomial_nogo_bounded(m: usize, n: usize, bound: usize) -> Result<NoGoReport> {
    for (what, value) in [("M", m), ("N", n)] {
        if value > bound {
            return Err(Error::BoundExceeded { what, value, bound });
        }
    }
    let system = NoGoSystem::build(m, n);
    let matrix = system.matrix();
    let kernel = nullspace(&matrix, system.cols());
    let basis = kernel
        .into_iter()
        .map(|v| v.chunks(n + 1).map(<[Rational]>::to_vec).collect())
        .collect::<Vec<Vec<Vec<Rational>>>>();
    Ok(NoGoReport {
        m,
        n,
        system_rows: matrix.len(),
        system_cols: system.cols(),
        nullity: basis.len(),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_have_no_solution() {
        for (m, n) in [(0, 0), (2, 2), (1, 3), (6, 6)] {
            let report = polynomial_nogo(m, n).unwrap();
            assert_eq!(report.nullity, 0, "({m},{n})");
            assert!(report.basis.is_empty());
            assert_eq!(report.system_cols, (m + 1) * (n + 1));
        }
    }

    #[test]
    fn scalar_case_is_a_single_equation() {
        let system = NoGoSystem::build(0, 0);
        assert_eq!(system.rows.len(), 1);
        assert_eq!(system.rows[&(0, 2)], vec![Rational::from_integer(4.into())]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            polynomial_nogo(9, 1),
            Err(Error::BoundExceeded { what: "M", value: 9, bound: 8 })
        );
        assert!(polynomial_nogo_bounded(9, 1, 9).is_ok());
    }

    #[test]
    fn interior_rows_follow_the_recurrence() {
        // coefficient of B^j A^{k+2}: 4a_{jk} + 4(j+1)a_{j+1,k+1} + (j+1)(j+2)a_{j+2,k+2}
        let (m, n) = (5, 5);
        let system = NoGoSystem::build(m, n);
        for j in 0..=m - 2 {
            for k in 0..=n - 2 {
                let mut expected = vec![Rational::zero(); system.cols()];
                let idx = |a: usize, b: usize| a * (n + 1) + b;
                expected[idx(j, k)] = Rational::from_integer(4.into());
                expected[idx(j + 1, k + 1)] = Rational::from_integer((4 * (j + 1) as i64).into());
                expected[idx(j + 2, k + 2)] = Rational::from_integer((((j + 1) * (j + 2)) as i64).into());
                assert_eq!(system.rows[&(j, k + 2)], expected, "({j},{k})");
            }
        }
    }

    #[test]
    fn boundary_rows() {
        for m in 0..=4 {
            for n in 0..=4 {
                assert!(NoGoSystem::build(m, n).boundary_rows_hold(), "({m},{n})");
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let v = polynomial_nogo(1, 1).unwrap().to_json();
        assert_eq!(v["nullity"], 0);
        assert_eq!(v["system_cols"], 4);
        assert!(v["basis"].as_array().unwrap().is_empty());
    }
}
