mod common;

use canonlab_core::canon::{
    canon_polynomial_bruteforce, constant_descent_labelings, dissonant_palindromy_check, dissonant_polynomial,
    dissonant_shift_check, generalized_product_identity, multiset_interpretation_check, product_identity,
    standard_bases, weak_descent_polynomial, AmphibianSpec,
};
use canonlab_core::linext::{descent_histogram, par_descent_histogram};
use canonlab_core::perm::permutations;
use canonlab_core::poly::hstar;
use canonlab_core::poset::{canon_labeling, descent_shift_vector, product_with_chain, PosetFile};
use canonlab_core::{GammaExpansion, IntPolynomial, Labeling, Limits, Poset};
use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lim() -> Limits {
    Limits::default()
}

fn x_pow(k: usize) -> IntPolynomial {
    IntPolynomial::monomial(1, k)
}

#[test]
fn copy_order_only_shifts_the_product_hstar() {
    // h*(P x [n], w x sigma) = x^{k + des sigma} h*(P x [n], natural)
    for (name, base) in standard_bases() {
        for n in 1..=3 {
            let product = product_with_chain(&base, n);
            let natural = hstar(&product, &Labeling::natural(&product), &lim()).unwrap();
            for (w, k) in constant_descent_labelings(&base).unwrap() {
                for sigma in permutations(n) {
                    let h = hstar(&product, &canon_labeling(&w, &sigma), &lim()).unwrap();
                    assert_eq!(h, &x_pow(k + sigma.descents()) * &natural, "{name} w={:?} sigma={:?}", w, sigma);
                }
            }
        }
    }
}

#[test]
fn product_formula_on_standard_bases() {
    for (name, base) in standard_bases() {
        for n in 1..=3 {
            for (w, _) in constant_descent_labelings(&base).unwrap() {
                let r = product_identity(&base, &w, n, &lim()).unwrap();
                assert!(r.holds, "{name} n={n}: {r:?}");
            }
        }
        let natural = Labeling::natural(&base);
        for index in [Poset::antichain(3), Poset::chain(3), canonlab_core::canon::v_poset()] {
            let r = generalized_product_identity(&base, &natural, &index, &lim()).unwrap();
            assert!(r.holds, "{name}: {r:?}");
        }
    }
}

#[test]
fn nothing_removed_matches_canon_polynomial() {
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        for w in permutations(m) {
            let spec = AmphibianSpec::full(m, n);
            assert_eq!(
                dissonant_polynomial(&spec, &w, &lim()).unwrap(),
                canon_polynomial_bruteforce(&Poset::chain(m), &w, n, &lim()).unwrap()
            );
        }
    }
}

#[test]
fn summand_reciprocity_two_rows() {
    for n in 1..=3 {
        for mask in 0..1u64 << AmphibianSpec::removable_count(2, n) {
            let spec = AmphibianSpec::from_mask(2, n, mask);
            for w in permutations(2) {
                let r = dissonant_palindromy_check(&spec, &w, &lim()).unwrap();
                assert!(r.holds, "{spec}: {r:?}");
                assert_eq!(r.summands.len(), (1..=n).product::<usize>());
            }
        }
    }
}

#[test]
fn labeling_shift_per_summand() {
    for (m, n) in [(2, 3), (3, 2)] {
        for mask in 0..1u64 << AmphibianSpec::removable_count(m, n) {
            let spec = AmphibianSpec::from_mask(m, n, mask);
            for w in permutations(m) {
                let reports = dissonant_shift_check(&spec, &w, &lim()).unwrap();
                assert!(reports.iter().all(|r| r.holds), "{spec} w={w:?}");
            }
        }
    }
}

#[test]
fn multiset_reading_on_all_subposets() {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        for mask in 0..1u64 << AmphibianSpec::removable_count(m, n) {
            let r = multiset_interpretation_check(&AmphibianSpec::from_mask(m, n, mask), &lim()).unwrap();
            assert!(r.holds, "{r:?}");
        }
    }
}

#[test]
fn weak_descents_are_shifted_canon_polynomial() {
    for m in 1..=3 {
        for n in 1..=3 {
            let c = canon_polynomial_bruteforce(&Poset::chain(m), &Labeling::identity(m), n, &lim()).unwrap();
            assert_eq!(weak_descent_polynomial(m, n, &lim()).unwrap(), c.shift(m - 1), "m={m} n={n}");
        }
    }
}

#[test]
fn shift_vectors_predict_hstar_shifts() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut found = 0;
    for _ in 0..200 {
        let len = 1 + (found % 6);
        let poset = random_poset(&mut rng, len, 0.5);
        let w = random_labeling(&mut rng, len);
        let w2 = random_labeling(&mut rng, len);
        if let Some(shift) = descent_shift_vector(&poset, &w, &w2).unwrap() {
            found += 1;
            let (h, h2) = (naive_hstar(&poset, &w), naive_hstar(&poset, &w2));
            if shift.k >= 0 {
                assert_eq!(h, &x_pow(shift.k as usize) * &h2);
            } else {
                assert_eq!(h2, &x_pow((-shift.k) as usize) * &h);
            }
        }
    }
    assert!(found > 20, "only {found} shift vectors");
}

#[test]
fn parallel_histogram_is_schedule_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let poset = random_poset(&mut rng, 8, 0.3);
        let w = random_labeling(&mut rng, 8);
        let serial = descent_histogram(&poset, &w, &lim()).unwrap();
        for depth in [0, 1, 2, 4, 8] {
            assert_eq!(par_descent_histogram(&poset, &w, depth, &lim()).unwrap(), serial);
        }
    }
}

#[test]
fn poset_files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..30 {
        let poset = random_poset(&mut rng, 6, 0.4);
        let w = random_labeling(&mut rng, 6);
        let text = PosetFile::from_poset(&poset, Some(&w)).to_json();
        let (back, labels) = PosetFile::parse(&text).unwrap().into_poset(false).unwrap();
        assert_eq!(back, poset);
        assert_eq!(labels, Some(w));
    }
}

fn small_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..20, 0..7).prop_map(IntPolynomial::from_coeffs)
}

proptest! {
    #[test]
    fn gamma_vectors_round_trip(gamma in prop::collection::vec(-30i64..30, 1..5), extra in 0usize..2) {
        let d = 2 * (gamma.len() - 1) + extra;
        let g = GammaExpansion { center_degree: d, gamma: gamma.iter().map(|&v| BigInt::from(v)).collect() };
        let p = g.reconstruct();
        prop_assert!(p.is_palindromic(0, d));
        let back = p.gamma_expansion(d).unwrap();
        prop_assert_eq!(back.reconstruct(), p);
        prop_assert_eq!(back.gamma, g.gamma);
    }

    #[test]
    fn reflection_is_an_involution(p in small_poly(), pad in 0usize..3) {
        let high = p.degree().unwrap_or(0) + pad;
        let r = p.reflect(high).unwrap();
        prop_assert_eq!(r.reflect(high).unwrap(), p.clone());
        prop_assert_eq!(p.is_palindromic(0, high), r == p);
    }

    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        let two = BigInt::from(2);
        prop_assert_eq!((&a * &b).eval(&two), a.eval(&two) * b.eval(&two));
    }

    #[test]
    fn products_of_palindromes_are_palindromic(a in small_poly(), b in small_poly()) {
        let (pa, pb) = (&a + &a.reflect(a.degree().unwrap_or(0)).unwrap(), &b + &b.reflect(b.degree().unwrap_or(0)).unwrap());
        let (da, db) = (a.degree().unwrap_or(0), b.degree().unwrap_or(0));
        prop_assert!((&pa * &pb).is_palindromic(0, da + db));
    }
}
