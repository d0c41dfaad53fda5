use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::NormalSeries;
use crate::numkit::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

/// A coefficient times a finite product of `A`s and `B`s, in the written
/// (not necessarily normal) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub coefficient: GaussianRational,
}

impl Word {
    pub fn new(letters: Vec<Letter>, coefficient: GaussianRational) -> Self {
        Word {
            letters,
            coefficient,
        }
    }

    pub fn scalar(coefficient: GaussianRational) -> Self {
        Word::new(Vec::new(), coefficient)
    }

    /// Parses a bare letter string such as `"ABBA"`; other characters are
    /// rejected.
    pub fn from_letters(s: &str) -> Option<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'A' => Some(Letter::A),
                'B' => Some(Letter::B),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Word::new(letters, GaussianRational::one()))
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(letters, &self.coefficient * &other.coefficient)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<&str> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::A => "A",
                Letter::B => "B",
            })
            .collect();
        if letters.is_empty() {
            return write!(f, "{}", self.coefficient);
        }
        crate::cli::write_term(f, &self.coefficient, &letters.join("*"), true)
    }
}

/// Normal form of a finite sum of words.
///
/// Each word is folded left to right: multiplying `B^j A^k` on the right by
/// `A` gives `B^j A^{k+1}`, and by `B` gives `B^{j+1} A^k + k B^j A^{k-1}`.
/// The result is exact everywhere; its declared window is the largest number
/// of `A`s in any word and its dbound the largest `#B - #A`.
pub fn normal_order(words: &[Word]) -> NormalSeries {
    let mut acc: BTreeMap<(usize, usize), GaussianRational> = BTreeMap::new();
    let mut window = 0usize;
    let mut dbound: Option<i64> = None;
    for word in words {
        if word.coefficient.is_zero() {
            continue;
        }
        let a = word.count(Letter::A);
        let b = word.count(Letter::B);
        window = window.max(a);
        let d = b as i64 - a as i64;
        dbound = Some(dbound.map_or(d, |cur| cur.max(d)));
        for ((j, k), c) in fold_word(&word.letters) {
            let c = c * &word.coefficient;
            *acc.entry((j, k)).or_insert_with(GaussianRational::zero) += &c;
        }
    }
    NormalSeries::from_parts_unchecked(acc, dbound.unwrap_or(0), window)
}

fn fold_word(letters: &[Letter]) -> BTreeMap<(usize, usize), GaussianRational> {
    let mut current: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    current.insert((0, 0), BigInt::one());
    for letter in letters {
        let mut next: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for ((j, k), c) in current {
            match letter {
                Letter::A => *next.entry((j, k + 1)).or_default() += &c,
                Letter::B => {
                    *next.entry((j + 1, k)).or_default() += &c;
                    if k > 0 {
                        *next.entry((j, k - 1)).or_default() += c * BigInt::from(k);
                    }
                }
            }
        }
        current = next;
    }
    current
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(key, c)| (key, GaussianRational::real(c.into())))
        .collect()
}
