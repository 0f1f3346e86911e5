use std::cmp::Ordering;

use braid_core::density::{between, contains, smaller_positive, DEFAULT_WITNESS_BUDGET};
use braid_core::garside::{
    centralizer_element, full_twist, homo_h, least_element_candidates, shepperd_generator,
};
use braid_core::order::{compare, equal, is_trivial, sigma_sign};
use braid_core::subgroups::linking_check_brunnian;
use braid_core::{
    burau_det, burau_matrix, decide, in_burau_kernel, sample, BraidWord, CandidateFamily,
    CentralizerParams, LaurentPoly, SigmaSign, SubgroupId,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(n: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

fn commutes(a: &BraidWord, b: &BraidWord) -> bool {
    is_trivial(&BraidWord::commutator(a, b).unwrap()).unwrap()
}

fn relators(n: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        for j in i + 1..n as i32 {
            let rel = if j - i >= 2 {
                vec![i, j, -i, -j]
            } else {
                vec![i, j, i, -j, -i, -j]
            };
            out.push(w(n, &rel));
        }
    }
    out
}

#[test]
fn full_twists_are_central() {
    for k in 2..=6 {
        let ft = full_twist(k, k, 1).unwrap();
        for i in 1..k {
            assert!(commutes(&ft, &w(k, &[i as i32])), "k={k} i={i}");
        }
    }
}

#[test]
fn centralizer_elements_centralize_lower_generators() {
    for r in 3..=6 {
        for p in -1..=1 {
            for q in -1..=1 {
                for params in [
                    CentralizerParams::frz(r, p, q),
                    CentralizerParams::uv(r, p, q),
                ] {
                    let c = centralizer_element(params, r).unwrap();
                    for i in 1..=r - 2 {
                        assert!(commutes(&c, &w(r, &[i as i32])), "{params:?} σ{i}");
                    }
                }
            }
        }
    }
}

#[test]
fn change_of_variables() {
    for r in 3..=5 {
        for p in -2..=2 {
            for q in -2..=2 {
                let frz = CentralizerParams::frz(r, p, q);
                let a = centralizer_element(frz, r).unwrap();
                let b = centralizer_element(frz.converted(), r).unwrap();
                assert!(equal(&a, &b).unwrap(), "r={r} p={p} q={q}");
            }
        }
    }
}

#[test]
fn h_kills_relators() {
    for rel in relators(4) {
        assert!(is_trivial(&homo_h(&rel).unwrap()).unwrap(), "{rel}");
    }
}

#[test]
fn shepperd_structure() {
    for n in 3..=6 {
        let top = shepperd_generator(n, n).unwrap();
        for i in 1..n {
            assert!(commutes(&top, &w(n, &[i as i32])));
        }
        let sub = shepperd_generator(n, n - 1).unwrap();
        assert_eq!(sub, full_twist(n - 1, n, 1).unwrap());
        assert_eq!(sigma_sign(&sub).unwrap(), SigmaSign::Positive(n - 2));
        for i in 1..=n {
            assert!(shepperd_generator(n, i).unwrap().is_pure());
        }
    }
}

#[test]
fn burau_relators_map_to_identity() {
    for n in 2..=7 {
        for rel in relators(n) {
            assert!(in_burau_kernel(&rel), "n={n} {rel}");
        }
    }
}

#[test]
fn commutator_section_cross_check() {
    // Δ_3^{2u} has exponent sum 6u, so none of these candidates is a
    // commutator; σ_1^u likewise.
    for u in 1..=3 {
        let c = full_twist(3, 3, u).unwrap();
        assert!(!decide(SubgroupId::Commutator, &c).unwrap());
        assert!(sigma_sign(&c).unwrap().is_positive());
    }
    for c in least_element_candidates(5, CandidateFamily::SigmaOne, 3).unwrap() {
        assert!(!decide(SubgroupId::Commutator, &c).unwrap());
    }
    for c in least_element_candidates(5, CandidateFamily::FullTwist { r: 3 }, 3).unwrap() {
        assert!(!decide(SubgroupId::Commutator, &c).unwrap());
    }
    // Every positive element of the commutator subgroup of B_3 that we build
    // from C(3) admits a smaller positive one.
    for u in 1..=2 {
        let beta = full_twist(3, 3, u)
            .unwrap()
            .concat(&w(3, &[-1]).pow(6 * u))
            .unwrap();
        assert!(decide(SubgroupId::Commutator, &beta).unwrap());
        let beta = if sigma_sign(&beta).unwrap().is_positive() {
            beta
        } else {
            beta.inverse()
        };
        let r = smaller_positive(SubgroupId::Commutator, &beta, DEFAULT_WITNESS_BUDGET).unwrap();
        assert!(r.found, "u={u}");
    }
}

#[test]
fn brunnian_examples_are_unlinked() {
    let b = w(3, &[1, -2]).pow(3);
    assert!(decide(SubgroupId::Brunnian, &b).unwrap());
    assert!(linking_check_brunnian(&b).unwrap());
    assert_eq!(b.exponent_sum(), 0);
    assert!(!is_trivial(&b).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn h_is_letterwise_homomorphism(a in prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..12),
                                    b in prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..12)) {
        let (a, b) = (w(4, &a), w(4, &b));
        let lhs = homo_h(&a.concat(&b).unwrap()).unwrap();
        let rhs = homo_h(&a).unwrap().concat(&homo_h(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn burau_is_multiplicative(n in 2usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BraidWord::random(&mut rng, n, 10);
        let b = BraidWord::random(&mut rng, n, 10);
        prop_assert_eq!(
            burau_matrix(&a.concat(&b).unwrap()),
            &burau_matrix(&a) * &burau_matrix(&b)
        );
    }

    #[test]
    fn burau_determinant_law(n in 2usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BraidWord::random(&mut rng, n, 20);
        prop_assert_eq!(burau_det(&a), LaurentPoly::neg_t_pow(a.exponent_sum()));
    }

    #[test]
    fn burau_kernel_has_zero_exponent_sum(n in 2usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BraidWord::random(&mut rng, n, 8);
        if in_burau_kernel(&a) {
            prop_assert_eq!(a.exponent_sum(), 0);
        }
        if a.exponent_sum() != 0 {
            prop_assert!(!in_burau_kernel(&a));
        }
    }

    #[test]
    fn normality(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (id, n) in [
            (SubgroupId::Commutator, 4),
            (SubgroupId::Pure, 4),
            (SubgroupId::KerH4, 4),
        ] {
            let m = sample(id, n, 5, seed).unwrap();
            let g = BraidWord::random(&mut rng, n, 6);
            prop_assert!(decide(id, &g.conjugate_by(&m).unwrap()).unwrap());
        }
        let b = w(3, &[1, -2]).pow(3);
        let g = BraidWord::random(&mut rng, 3, 5);
        prop_assert!(decide(SubgroupId::Brunnian, &g.conjugate_by(&b).unwrap()).unwrap());
    }

    #[test]
    fn containments(seed in any::<u64>()) {
        let k = sample(SubgroupId::KerH4, 4, 5, seed).unwrap();
        prop_assert!(decide(SubgroupId::Commutator, &k).unwrap());
        let pc = sample(SubgroupId::PureCommutatorSampled, 4, 4, seed).unwrap();
        prop_assert!(decide(SubgroupId::Commutator, &pc).unwrap());
        prop_assert!(decide(SubgroupId::Pure, &pc).unwrap());
        let h = sample(SubgroupId::ShepperdSampled, 4, 3, seed).unwrap();
        prop_assert!(decide(SubgroupId::Pure, &h).unwrap());
    }

    #[test]
    fn commutator_membership_ignores_relators(seed in any::<u64>(), pos in 0usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = BraidWord::random(&mut rng, 4, 12);
        let rels = relators(4);
        let rel = &rels[pos % rels.len()];
        let cut = pos % (a.len() + 1);
        let mut letters = a.letters()[..cut].to_vec();
        letters.extend_from_slice(rel.letters());
        letters.extend_from_slice(&a.letters()[cut..]);
        let b = w(4, &letters);
        prop_assert_eq!(decide(SubgroupId::Commutator, &a).unwrap(),
                        decide(SubgroupId::Commutator, &b).unwrap());
        prop_assert_eq!(decide(SubgroupId::Commutator, &a).unwrap(),
                        decide(SubgroupId::Commutator, &a.free_reduce()).unwrap());
    }

    #[test]
    fn pure_least_element(seed in any::<u64>(), n in 3usize..=5) {
        let p = sample(SubgroupId::Pure, n, 8, seed).unwrap();
        let s = sigma_sign(&p).unwrap();
        let p = if s.is_negative() { p.inverse() } else { p };
        if s != SigmaSign::Trivial {
            let s1sq = w(n, &[1, 1]);
            prop_assert_ne!(compare(&s1sq, &p).unwrap(), Ordering::Greater);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn between_matches_smaller_positive(seed in any::<u64>()) {
        let id = SubgroupId::Commutator;
        let a = sample(id, 3, 6, seed).unwrap();
        let b = sample(id, 3, 6, seed.wrapping_add(1)).unwrap();
        let (f, g) = match compare(&a, &b).unwrap() {
            Ordering::Less => (a, b),
            Ordering::Greater => (b, a),
            Ordering::Equal => return Ok(()),
        };
        let beta = f.inverse().concat(&g).unwrap().free_reduce();
        let sp = smaller_positive(id, &beta, DEFAULT_WITNESS_BUDGET).unwrap();
        let bt = between(id, &f, &g, DEFAULT_WITNESS_BUDGET).unwrap();
        prop_assert_eq!(sp.found, bt.found);
        if let (Some(gamma), Some(h)) = (sp.witness, bt.witness) {
            prop_assert_eq!(h, f.concat(&gamma).unwrap().free_reduce());
        }
    }

    #[test]
    fn witnesses_revalidate(seed in any::<u64>()) {
        let id = SubgroupId::KerH4;
        let beta = sample(id, 4, 4, seed).unwrap();
        let beta = match sigma_sign(&beta).unwrap() {
            SigmaSign::Trivial => return Ok(()),
            SigmaSign::Negative(_) => beta.inverse(),
            SigmaSign::Positive(_) => beta,
        };
        let r = smaller_positive(id, &beta, DEFAULT_WITNESS_BUDGET).unwrap();
        if let Some(g) = r.witness {
            prop_assert!(contains(id, &g).unwrap());
            prop_assert_eq!(compare(&BraidWord::identity(4), &g).unwrap(), Ordering::Less);
            prop_assert_eq!(compare(&g, &beta).unwrap(), Ordering::Less);
        }
    }
}
