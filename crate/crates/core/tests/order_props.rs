use std::cmp::Ordering;

use braid_core::order::{compare, handle_reduce_traced, is_trivial, sigma_sign, SigmaSign};
use braid_core::{BraidWord, DEFAULT_STEP_BUDGET};
use proptest::prelude::*;

/// Artin's faithful right action of `B_n` on the free group `F_n`, used as
/// an independent word-problem oracle.
fn artin_trivial(w: &BraidWord) -> bool {
    fn reduce_push(out: &mut Vec<i32>, e: i32) {
        if out.last() == Some(&-e) {
            out.pop();
        } else {
            out.push(e);
        }
    }
    fn inv(v: &[i32]) -> Vec<i32> {
        v.iter().rev().map(|&e| -e).collect()
    }
    fn cat(parts: &[&[i32]]) -> Vec<i32> {
        let mut out = Vec::new();
        for p in parts {
            for &e in *p {
                reduce_push(&mut out, e);
            }
        }
        out
    }
    let n = w.n();
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|k| vec![k]).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (images[i].clone(), images[i + 1].clone());
        if l > 0 {
            images[i] = cat(&[&a, &b, &inv(&a)]);
            images[i + 1] = a;
        } else {
            images[i] = b.clone();
            images[i + 1] = cat(&[&inv(&b), &a, &b]);
        }
    }
    images
        .iter()
        .enumerate()
        .all(|(k, img)| img.as_slice() == [k as i32 + 1])
}

fn letters(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let top = (n - 1) as i32;
    prop::collection::vec((1..=top, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        BraidWord::new(
            n,
            ls.into_iter()
                .map(|(i, neg)| if neg { -i } else { i })
                .collect(),
        )
        .unwrap()
    })
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| letters(n, max_len))
}

fn triple(
    max_n: usize,
    max_len: usize,
) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            letters(n, max_len),
            letters(n, max_len),
            letters(n, max_len),
        )
    })
}

fn positive_word_in(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(n, max_len).prop_filter_map("not positive", |w| match sigma_sign(&w).unwrap() {
        SigmaSign::Positive(_) => Some(w),
        SigmaSign::Negative(_) => Some(w.inverse()),
        SigmaSign::Trivial => None,
    })
}

#[test]
fn artin_oracle_sanity() {
    let relator = BraidWord::new(3, vec![1, 2, 1, -2, -1, -2]).unwrap();
    assert!(artin_trivial(&relator));
    assert!(!artin_trivial(&BraidWord::new(3, vec![1]).unwrap()));
    assert!(!artin_trivial(
        &BraidWord::new(3, vec![1, 2, -1, -2]).unwrap()
    ));
}

#[test]
fn relators_are_trivial() {
    for n in 2..=7 {
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                let rel = if (i - j).abs() >= 2 {
                    vec![i, j, -i, -j]
                } else if (i - j).abs() == 1 {
                    vec![i, j, i, -j, -i, -j]
                } else {
                    continue;
                };
                let w = BraidWord::new(n, rel).unwrap();
                assert!(is_trivial(&w).unwrap(), "n={n} i={i} j={j}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn word_problem_matches_artin_action(w in word(5, 14)) {
        prop_assert_eq!(is_trivial(&w).unwrap(), artin_trivial(&w));
    }

    #[test]
    fn reduced_word_is_equivalent(w in word(5, 14)) {
        let r = handle_reduce_traced(&w, DEFAULT_STEP_BUDGET).unwrap();
        let diff = w.inverse().concat(&r.word).unwrap();
        prop_assert!(artin_trivial(&diff));
        prop_assert!(r.max_len >= r.word.len());
    }

    #[test]
    fn trichotomy_and_antisymmetry(w in word(6, 40)) {
        let s = sigma_sign(&w).unwrap();
        let verdicts = [
            s == SigmaSign::Trivial,
            s.is_positive(),
            s.is_negative(),
        ];
        prop_assert_eq!(verdicts.iter().filter(|&&b| b).count(), 1);
        prop_assert_eq!(sigma_sign(&w.inverse()).unwrap(), s.flip());
        if let Some(i) = s.main_index() {
            prop_assert!(i >= 1 && i < w.n());
        }
    }

    #[test]
    fn product_with_inverse_is_trivial(w in word(6, 30)) {
        prop_assert!(is_trivial(&w.concat(&w.inverse()).unwrap()).unwrap());
        prop_assert!(is_trivial(&w.inverse().concat(&w).unwrap()).unwrap());
    }

    #[test]
    fn left_invariance((a, b, c) in triple(5, 12)) {
        let ca = c.concat(&a).unwrap();
        let cb = c.concat(&b).unwrap();
        prop_assert_eq!(compare(&a, &b).unwrap(), compare(&ca, &cb).unwrap());
        prop_assert_eq!(compare(&a, &b).unwrap(), compare(&b, &a).unwrap().reverse());
    }

    #[test]
    fn sigma_one_is_least_positive(n in 3usize..=6, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s1 = BraidWord::new(n, vec![1]).unwrap();
        let w = BraidWord::random(&mut rng, n, 12);
        let w = match sigma_sign(&w).unwrap() {
            SigmaSign::Negative(_) => w.inverse(),
            _ => w,
        };
        if sigma_sign(&w).unwrap().is_positive() {
            prop_assert_ne!(compare(&s1, &w).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn successor_property(g in word(4, 12), w in positive_word_in(4, 10)) {
        let g = BraidWord::new(4, g.letters().to_vec()).unwrap();
        let s1 = BraidWord::new(4, vec![1]).unwrap();
        let gs = g.concat(&s1).unwrap();
        prop_assert_eq!(compare(&g, &gs).unwrap(), Ordering::Less);
        let gw = g.concat(&w).unwrap();
        prop_assert_ne!(compare(&gs, &gw).unwrap(), Ordering::Greater);
    }

    #[test]
    fn transitivity((a, b, c) in triple(4, 8)) {
        let ab = compare(&a, &b).unwrap();
        let bc = compare(&b, &c).unwrap();
        if ab == Ordering::Less && bc == Ordering::Less {
            prop_assert_eq!(compare(&a, &c).unwrap(), Ordering::Less);
        }
    }
}
