use num_traits::{One, Zero};

use crate::error::Result;
use crate::numkit::GaussianRational;
use crate::weyl::NormalSeries;

use super::apply::apply_series;
use super::poly::Poly;

/// Descriptor of a linear operator on `C[x]`. Nothing is evaluated until
/// [`PolyOp::apply`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Zero,
    Identity,
    /// `d^n/dx^n`.
    Derivative(u32),
    /// Multiplication by `x`.
    MulX,
    Series(NormalSeries),
    Scaled(GaussianRational, Box<PolyOp>),
    Sum(Vec<PolyOp>),
    /// `ops[0] * ops[1] * ...`; the last factor acts first.
    Product(Vec<PolyOp>),
}

impl PolyOp {
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        Ok(match self {
            PolyOp::Zero => Poly::zero(),
            PolyOp::Identity => p.clone(),
            PolyOp::Derivative(n) => p.nth_derivative(*n as usize),
            PolyOp::MulX => p.mulx(),
            PolyOp::Series(s) => apply_series(s, p)?,
            PolyOp::Scaled(c, op) => op.apply(p)?.scale(c),
            PolyOp::Sum(ops) => {
                let mut acc = Poly::zero();
                for op in ops {
                    acc = &acc + &op.apply(p)?;
                }
                acc
            }
            PolyOp::Product(ops) => {
                let mut acc = p.clone();
                for op in ops.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                acc
            }
        })
    }

    pub fn scaled(self, c: GaussianRational) -> PolyOp {
        if c.is_zero() || self == PolyOp::Zero {
            PolyOp::Zero
        } else if c.is_one() {
            self
        } else {
            PolyOp::Scaled(c, Box::new(self))
        }
    }

    pub fn negated(self) -> PolyOp {
        self.scaled(-GaussianRational::one())
    }

    fn then_sum(terms: Vec<PolyOp>) -> PolyOp {
        let terms: Vec<PolyOp> = terms.into_iter().filter(|t| *t != PolyOp::Zero).collect();
        match terms.len() {
            0 => PolyOp::Zero,
            1 => terms.into_iter().next().expect("one term"),
            _ => PolyOp::Sum(terms),
        }
    }

    fn product(left: &PolyOp, right: &PolyOp) -> PolyOp {
        match (left, right) {
            (PolyOp::Zero, _) | (_, PolyOp::Zero) => PolyOp::Zero,
            (PolyOp::Identity, op) | (op, PolyOp::Identity) => op.clone(),
            _ => PolyOp::Product(vec![left.clone(), right.clone()]),
        }
    }

    /// The generalized `B` slot `x - d^s/dx^s`, or plain `x` without `s`.
    pub fn b_slot(s: Option<u32>) -> PolyOp {
        match s {
            None => PolyOp::MulX,
            Some(s) => PolyOp::Sum(vec![PolyOp::MulX, PolyOp::Derivative(s).negated()]),
        }
    }
}

/// Constant 2x2 matrix.
pub type Mat2 = [[GaussianRational; 2]; 2];

/// The Pauli matrices `sigma_1`, `sigma_2`, `sigma_3`; `n` outside 1..=3
/// gives the identity.
pub fn pauli(n: u8) -> Mat2 {
    let z = GaussianRational::zero;
    let one = GaussianRational::one;
    let i = GaussianRational::i;
    match n {
        1 => [[z(), one()], [one(), z()]],
        2 => [[z(), -i()], [i(), z()]],
        3 => [[one(), z()], [z(), -one()]],
        _ => [[one(), z()], [z(), one()]],
    }
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let entry = |r: usize, c: usize| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// 2x2 matrix of operators acting on pairs of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockOp {
    pub entries: [[PolyOp; 2]; 2],
}

impl BlockOp {
    pub fn new(entries: [[PolyOp; 2]; 2]) -> Self {
        BlockOp { entries }
    }

    pub fn diag(a: PolyOp, b: PolyOp) -> Self {
        BlockOp::new([[a, PolyOp::Zero], [PolyOp::Zero, b]])
    }

    /// `m (x) op`.
    pub fn tensor(m: &Mat2, op: &PolyOp) -> Self {
        let e = |r: usize, c: usize| op.clone().scaled(m[r][c].clone());
        BlockOp::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn apply(&self, pair: &(Poly, Poly)) -> Result<(Poly, Poly)> {
        let row = |r: usize| -> Result<Poly> {
            Ok(&self.entries[r][0].apply(&pair.0)? + &self.entries[r][1].apply(&pair.1)?)
        };
        Ok((row(0)?, row(1)?))
    }

    /// Lazy matrix product `self * other`.
    pub fn compose(&self, other: &BlockOp) -> BlockOp {
        let e = |r: usize, c: usize| {
            PolyOp::then_sum(
                (0..2)
                    .map(|k| PolyOp::product(&self.entries[r][k], &other.entries[k][c]))
                    .collect(),
            )
        };
        BlockOp::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn add(&self, other: &BlockOp) -> BlockOp {
        let e = |r: usize, c: usize| {
            PolyOp::then_sum(vec![self.entries[r][c].clone(), other.entries[r][c].clone()])
        };
        BlockOp::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, c: &GaussianRational) -> BlockOp {
        let e = |r: usize, k: usize| self.entries[r][k].clone().scaled(c.clone());
        BlockOp::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn sub(&self, other: &BlockOp) -> BlockOp {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn anticommutator(&self, other: &BlockOp) -> BlockOp {
        self.compose(other).add(&other.compose(self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Operator matrices on the even/odd splitting.
    DirectSum,
    /// Pauli matrices tensored with `A`, `B` and `I`.
    PauliTensor,
}

/// `(A1, A2, A3)` as block operators with `A = d/dx` and `B` the
/// (optionally generalized) `B` slot.
pub fn block_triple(kind: BlockKind, s: Option<u32>) -> [BlockOp; 3] {
    let d = PolyOp::Derivative(1);
    let b = PolyOp::b_slot(s);
    match kind {
        BlockKind::DirectSum => [
            BlockOp::new([[PolyOp::Zero, d.clone()], [d, PolyOp::Zero]]),
            BlockOp::new([[PolyOp::Zero, b.clone().negated()], [b, PolyOp::Zero]]),
            BlockOp::diag(PolyOp::Identity, PolyOp::Identity.negated()),
        ],
        BlockKind::PauliTensor => {
            let minus_i = -GaussianRational::i();
            let s2 = pauli(2).map(|row| row.map(|c| &c * &minus_i));
            [
                BlockOp::tensor(&pauli(1), &d),
                BlockOp::tensor(&s2, &b),
                BlockOp::tensor(&pauli(3), &PolyOp::Identity),
            ]
        }
    }
}

/// `{A1,A2} - A3`, `{A1,A3}` and `{A2,A3}` applied to `pair`.
pub fn block_residuals(triple: &[BlockOp; 3], pair: &(Poly, Poly)) -> Result<[(Poly, Poly); 3]> {
    let [a1, a2, a3] = triple;
    Ok([
        a1.anticommutator(a2).sub(a3).apply(pair)?,
        a1.anticommutator(a3).apply(pair)?,
        a2.anticommutator(a3).apply(pair)?,
    ])
}
