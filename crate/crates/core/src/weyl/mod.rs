//! `(B,A)`-normal-ordered series for the Weyl relation `AB - BA = I`.

mod aseries;
mod series;
mod word;

pub use aseries::ASeries;
pub use series::NormalSeries;
pub use word::{normal_order, Letter, Word};

#[cfg(test)]
mod properties {
    use std::collections::BTreeMap;

    use num_traits::{One, Zero};
    use proptest::prelude::*;

    use super::*;
    use crate::numkit::GaussianRational;

    fn g(n: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratio(n, d)
    }

    /// Rewrites the leftmost `AB` to `BA + I` until no word changes.
    fn brute_force(letters: &[Letter]) -> BTreeMap<(usize, usize), GaussianRational> {
        let mut pending: Vec<(Vec<Letter>, i64)> = vec![(letters.to_vec(), 1)];
        let mut done: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        while let Some((word, c)) = pending.pop() {
            match word.windows(2).position(|w| w == [Letter::A, Letter::B]) {
                Some(pos) => {
                    let mut swapped = word.clone();
                    swapped.swap(pos, pos + 1);
                    let mut contracted = word.clone();
                    contracted.drain(pos..pos + 2);
                    pending.push((swapped, c));
                    pending.push((contracted, c));
                }
                None => {
                    let j = word.iter().filter(|&&l| l == Letter::B).count();
                    *done.entry((j, word.len() - j)).or_default() += c;
                }
            }
        }
        done.into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(key, c)| (key, GaussianRational::from_int(c)))
            .collect()
    }

    #[test]
    fn normal_order_matches_brute_force_up_to_length_8() {
        for len in 0..=8usize {
            for mask in 0..(1u32 << len) {
                let letters: Vec<Letter> = (0..len)
                    .map(|i| if mask >> i & 1 == 1 { Letter::B } else { Letter::A })
                    .collect();
                let fast = normal_order(&[Word::new(letters.clone(), g(1, 1))]);
                let slow = brute_force(&letters);
                let fast: BTreeMap<_, _> = fast.entries().map(|(k, c)| (*k, c.clone())).collect();
                assert_eq!(fast, slow, "{letters:?}");
            }
        }
    }

    #[test]
    fn defining_relation_examples() {
        let ab = Word::from_letters("AB").unwrap();
        let ba = Word::from_letters("BA").unwrap();
        assert_eq!(normal_order(std::slice::from_ref(&ab)).to_string(), "B*A + 1");
        assert_eq!(normal_order(std::slice::from_ref(&ba)).to_string(), "B*A");
        let diff = normal_order(&[ab, Word::new(ba.letters, g(-1, 1))]);
        assert_eq!(diff.to_string(), "1");
    }

    fn poly_in(letter: Letter, coeffs: &[GaussianRational]) -> Vec<Word> {
        coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| Word::new(vec![letter; n], c.clone()))
            .collect()
    }

    fn append(words: &[Word], letter: Letter, first: bool) -> Vec<Word> {
        words
            .iter()
            .map(|w| {
                let mut letters = w.letters.clone();
                if first {
                    letters.insert(0, letter);
                } else {
                    letters.push(letter);
                }
                Word::new(letters, w.coefficient.clone())
            })
            .collect()
    }

    fn derivative(coeffs: &[GaussianRational]) -> Vec<GaussianRational> {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c.scale_int(&(n as i64).into()))
            .collect()
    }

    fn arb_coeffs(max_len: usize) -> impl Strategy<Value = Vec<GaussianRational>> {
        proptest::collection::vec((-9i64..=9, 1i64..=9), 1..=max_len)
            .prop_map(|v| v.into_iter().map(|(n, d)| g(n, d)).collect())
    }

    /// Random series in the diagonal-bounded class `j - k <= dbound`.
    fn arb_series(dbound: i64, window: usize) -> impl Strategy<Value = NormalSeries> {
        proptest::collection::vec((0usize..=window + 3, 0usize..=window, -5i64..=5), 0..8).prop_map(
            move |raw| {
                let entries = raw.into_iter().filter_map(|(j, k, c)| {
                    (j as i64 - k as i64 <= dbound).then_some(((j, k), GaussianRational::from_int(c)))
                });
                NormalSeries::from_entries(entries, dbound, window).unwrap()
            },
        )
    }

    /// The same random entries for every window: widening the window then
    /// genuinely adds coefficients beyond the old exact region.
    fn arb_pair_with_widening() -> impl Strategy<Value = (Vec<((usize, usize), i64)>, i64, usize)> {
        (-1i64..=2, 2usize..=6).prop_flat_map(|(d, w)| {
            (
                proptest::collection::vec(((0usize..=w + 6), (0usize..=w + 4), -5i64..=5), 0..12)
                    .prop_map(move |raw| {
                        raw.into_iter()
                            .filter(|&(j, k, _)| j as i64 - k as i64 <= d)
                            .map(|(j, k, c)| ((j, k), c))
                            .collect()
                    }),
                Just(d),
                Just(w),
            )
        })
    }

    fn truncate(raw: &[((usize, usize), i64)], dbound: i64, window: usize) -> NormalSeries {
        let entries = raw
            .iter()
            .filter(|((_, k), _)| *k <= window)
            .map(|&(key, c)| (key, GaussianRational::from_int(c)));
        NormalSeries::from_entries(entries, dbound, window).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn a_moves_past_polynomial_in_b(coeffs in arb_coeffs(9)) {
            // f(A) B = B f(A) + f'(A)
            let f = poly_in(Letter::A, &coeffs);
            let lhs = normal_order(&append(&f, Letter::B, false));
            let mut rhs = append(&f, Letter::B, true);
            rhs.extend(poly_in(Letter::A, &derivative(&coeffs)));
            prop_assert!(lhs.eq_on_window(&normal_order(&rhs)));
            prop_assert_eq!(lhs.sub(&normal_order(&rhs)).len(), 0);
        }

        #[test]
        fn polynomial_in_b_moves_past_a(coeffs in arb_coeffs(9)) {
            // A g(B) = g(B) A + g'(B)
            let gb = poly_in(Letter::B, &coeffs);
            let lhs = normal_order(&append(&gb, Letter::A, true));
            let mut rhs = append(&gb, Letter::A, false);
            rhs.extend(poly_in(Letter::B, &derivative(&coeffs)));
            prop_assert!(lhs.sub(&normal_order(&rhs)).is_zero());
        }

        #[test]
        fn t_anticommutes_with_generators(window in 1usize..=10) {
            let t = NormalSeries::t_series(window);
            let at = NormalSeries::a(window).anticommutator(&t).unwrap();
            prop_assert!(at.is_zero());
            let bt = t.anticommutator(&NormalSeries::b(window)).unwrap();
            prop_assert!(bt.is_zero());
        }

        #[test]
        fn t_reflects_a_series(coeffs in arb_coeffs(9)) {
            // f(A) T = T f(-A)
            let f = ASeries::from_coeffs(coeffs.into_iter().enumerate(), 12);
            let t = NormalSeries::t_series(12);
            let lhs = NormalSeries::lift_a_series(&f).mul(&t).unwrap();
            let rhs = t.mul(&NormalSeries::lift_a_series(&f.neg_arg())).unwrap();
            prop_assert!(lhs.eq_on_window(&rhs));
        }

        #[test]
        fn multiplication_is_associative(
            x in arb_series(1, 6),
            y in arb_series(0, 6),
            z in arb_series(-1, 6),
        ) {
            let lhs = x.mul(&y).unwrap().mul(&z).unwrap();
            let rhs = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert!(lhs.eq_on_window(&rhs));
        }

        #[test]
        fn widening_windows_preserves_exact_region(
            (left, d1, w1) in arb_pair_with_widening(),
            (right, d2, w2) in arb_pair_with_widening(),
        ) {
            let x = truncate(&left, d1, w1);
            let y = truncate(&right, d2, w2);
            if let Ok(prod) = x.mul(&y) {
                let wide = truncate(&left, d1, w1 + 4).mul(&truncate(&right, d2, w2 + 4)).unwrap();
                prop_assert!(wide.window() >= prod.window());
                prop_assert_eq!(wide.restrict(prod.window()), prod);
            }
        }
    }

    #[test]
    fn t_squared_is_identity_through_16() {
        for k in 1..=16 {
            let t = NormalSeries::t_series(k);
            assert!(t.mul(&t).unwrap().eq_on_window(&NormalSeries::identity(k)));
        }
    }

    #[test]
    fn words_scale_and_concat() {
        let w = Word::from_letters("AB").unwrap().concat(&Word::scalar(g(3, 1)));
        assert_eq!(w.coefficient, g(3, 1));
        assert_eq!(w.count(Letter::A), 1);
        assert!(Word::from_letters("AxB").is_none());
        assert!(normal_order(&[]).is_zero());
        assert!(GaussianRational::one() != GaussianRational::zero());
    }
}
