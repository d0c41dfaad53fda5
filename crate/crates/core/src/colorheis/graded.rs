use std::ops::Add;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::numkit::GaussianRational;
use crate::weyl::NormalSeries;

/// Element of `Z_2^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GradeVector {
    pub bits: [u8; 3],
}

impl GradeVector {
    pub fn new(a: u8, b: u8, c: u8) -> Self {
        GradeVector {
            bits: [a % 2, b % 2, c % 2],
        }
    }

    /// `alpha . beta` in `Z_2`.
    pub fn dot(self, other: GradeVector) -> u8 {
        self.bits
            .iter()
            .zip(other.bits)
            .map(|(a, b)| a * b)
            .sum::<u8>()
            % 2
    }

    /// Grades of `A1`, `A2`, `A3`.
    pub fn generators() -> [GradeVector; 3] {
        [
            GradeVector::new(1, 1, 0),
            GradeVector::new(1, 0, 1),
            GradeVector::new(0, 1, 1),
        ]
    }
}

impl Add for GradeVector {
    type Output = GradeVector;
    fn add(self, rhs: GradeVector) -> GradeVector {
        GradeVector::new(
            self.bits[0] + rhs.bits[0],
            self.bits[1] + rhs.bits[1],
            self.bits[2] + rhs.bits[2],
        )
    }
}

/// `(-1)^{g1 . g2}`.
pub fn commutation_factor(g1: GradeVector, g2: GradeVector) -> i8 {
    if g1.dot(g2) == 0 {
        1
    } else {
        -1
    }
}

/// Commutator for an even pairing, anticommutator for an odd one.
pub fn graded_bracket(
    x: &NormalSeries,
    y: &NormalSeries,
    g1: GradeVector,
    g2: GradeVector,
) -> Result<NormalSeries> {
    if commutation_factor(g1, g2) == 1 {
        x.commutator(y)
    } else {
        x.anticommutator(y)
    }
}

fn signed(s: &NormalSeries, sign: i8) -> NormalSeries {
    if sign == 1 {
        s.clone()
    } else {
        s.neg()
    }
}

/// `(-1)^{a.c} <a,<b,c>> + (-1)^{c.b} <c,<a,b>> + (-1)^{b.a} <b,<c,a>>`.
pub fn generalized_jacobi_residual(
    (a, ga): (&NormalSeries, GradeVector),
    (b, gb): (&NormalSeries, GradeVector),
    (c, gc): (&NormalSeries, GradeVector),
) -> Result<NormalSeries> {
    let term = |x: &NormalSeries, gx, y: &NormalSeries, gy, z: &NormalSeries, gz| -> Result<NormalSeries> {
        let inner = graded_bracket(y, z, gy, gz)?;
        graded_bracket(x, &inner, gx, gy + gz)
    };
    let t1 = signed(&term(a, ga, b, gb, c, gc)?, commutation_factor(ga, gc));
    let t2 = signed(&term(c, gc, a, ga, b, gb)?, commutation_factor(gc, gb));
    let t3 = signed(&term(b, gb, c, gc, a, ga)?, commutation_factor(gb, ga));
    Ok(t1.add(&t2).add(&t3))
}

/// The abstract three-dimensional algebra with `<A1,A2> = c12 A3`,
/// `<A2,A3> = c23 A1`, `<A3,A1> = c31 A2` and `<Ai,Ai> = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub c12: GaussianRational,
    pub c23: GaussianRational,
    pub c31: GaussianRational,
}

type Vec3 = [GaussianRational; 3];

impl StructureConstants {
    /// The color Heisenberg algebra: `c12 = 1`, `c23 = c31 = 0`.
    pub fn heisenberg() -> Self {
        StructureConstants {
            c12: GaussianRational::one(),
            c23: GaussianRational::zero(),
            c31: GaussianRational::zero(),
        }
    }

    /// Bracket of basis elements `i`, `j` (0-based) as a coordinate vector.
    /// Elements of different grades pair to an odd product here, so the
    /// bracket is symmetric off the diagonal.
    fn basis_bracket(&self, i: usize, j: usize) -> Vec3 {
        let mut out: Vec3 = Default::default();
        match (i.min(j), i.max(j)) {
            (0, 1) => out[2] = self.c12.clone(),
            (1, 2) => out[0] = self.c23.clone(),
            (0, 2) => out[1] = self.c31.clone(),
            _ => {}
        }
        out
    }

    fn bracket(&self, x: &Vec3, y: &Vec3) -> Vec3 {
        let mut out: Vec3 = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let w = &x[i] * &y[j];
                if w.is_zero() {
                    continue;
                }
                for (o, b) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    *o += &(&w * &b);
                }
            }
        }
        out
    }

    /// True iff the generalized Jacobi identity holds on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let grades = GradeVector::generators();
        let basis = |i: usize| {
            let mut v: Vec3 = Default::default();
            v[i] = GaussianRational::one();
            v
        };
        let sign = |g1, g2| GaussianRational::from_int(commutation_factor(g1, g2).into());
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let (ga, gb, gc) = (grades[a], grades[b], grades[c]);
                    let t1 = self.bracket(&basis(a), &self.bracket(&basis(b), &basis(c)));
                    let t2 = self.bracket(&basis(c), &self.bracket(&basis(a), &basis(b)));
                    let t3 = self.bracket(&basis(b), &self.bracket(&basis(c), &basis(a)));
                    let (s1, s2, s3) = (sign(ga, gc), sign(gc, gb), sign(gb, ga));
                    for k in 0..3 {
                        let total = &(&(&s1 * &t1[k]) + &(&s2 * &t2[k])) + &(&s3 * &t3[k]);
                        if !total.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
