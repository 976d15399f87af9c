#![allow(dead_code)]

use canonlab_core::perm::next_permutation;
use canonlab_core::{IntPolynomial, Labeling, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random poset on `len` elements: each pair `i < j` of a shuffled order is
/// related with probability `density`, then reduced to covers.
pub fn random_poset<R: Rng>(rng: &mut R, len: usize, density: f64) -> Poset {
    let mut order: Vec<usize> = (0..len).collect();
    order.shuffle(rng);
    let mut relations = Vec::new();
    for i in 0..len {
        for j in i + 1..len {
            if rng.gen_bool(density) {
                relations.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(len, relations).unwrap()
}

pub fn random_labeling<R: Rng>(rng: &mut R, len: usize) -> Labeling {
    let mut values: Vec<usize> = (1..=len).collect();
    values.shuffle(rng);
    Labeling::new(values).unwrap()
}

/// Linear extensions by filtering all `len!` orders.
pub fn naive_extensions(poset: &Poset) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..poset.len()).collect();
    let mut out = Vec::new();
    loop {
        let mut position = vec![0; order.len()];
        for (i, &e) in order.iter().enumerate() {
            position[e] = i;
        }
        if poset.covers().iter().all(|&(a, b)| position[a] < position[b]) {
            out.push(order.clone());
        }
        if !next_permutation(&mut order) {
            return out;
        }
    }
}

pub fn descents(word: &[usize]) -> usize {
    word.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn naive_hstar(poset: &Poset, w: &Labeling) -> IntPolynomial {
    let mut counts = vec![0u128; poset.len().max(1)];
    for order in naive_extensions(poset) {
        let word: Vec<usize> = order.iter().map(|&e| w.label(e)).collect();
        counts[descents(&word)] += 1;
    }
    IntPolynomial::from_counts(&counts)
}

/// Canon permutations of `{1^m, ..., n^m}` found by filtering every
/// multiset permutation.
pub fn naive_canon_words(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut word: Vec<usize> = (1..=n).flat_map(|v| std::iter::repeat_n(v, m)).collect();
    let mut out = Vec::new();
    loop {
        let mut seen = vec![0usize; n + 1];
        let mut copies = vec![Vec::new(); m];
        for &letter in &word {
            copies[seen[letter]].push(letter);
            seen[letter] += 1;
        }
        if copies.iter().all(|c| c == &copies[0]) {
            out.push(word.clone());
        }
        if !next_permutation(&mut word) {
            return out;
        }
    }
}

pub fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(c.iter().copied())
}
