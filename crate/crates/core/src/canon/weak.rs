use super::canon_polynomial_bruteforce;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linext::{is_canon_permutation, MultisetWord};
use crate::perm::multiset_permutations;
use crate::poly::IntPolynomial;
use crate::poset::{Labeling, Poset};

/// All canon permutations of `{1^m, ..., n^m}`, in lexicographic order.
pub fn canon_words(m: usize, n: usize, limits: &Limits) -> Result<Vec<MultisetWord>> {
    limits.check_brute_force(m, n)?;
    multiset_permutations(m, n)
        .map(|letters| MultisetWord::new(letters, m))
        .filter(|w| w.as_ref().map_or(true, is_canon_permutation))
        .collect()
}

/// `sum x^wdes` over the canon permutations, read off the words directly.
pub fn weak_descent_by_words(m: usize, n: usize, limits: &Limits) -> Result<IntPolynomial> {
    let mut counts = vec![0u128; m * n];
    for w in canon_words(m, n, limits)? {
        counts[w.weak_descents()] += 1;
    }
    Ok(IntPolynomial::from_counts(&counts))
}

/// Weak-descent polynomial of canon permutations, computed from the words
/// and again as the canon polynomial of `[m]` under the order-reversing
/// labeling. The two must agree.
pub fn weak_descent_polynomial(m: usize, n: usize, limits: &Limits) -> Result<IntPolynomial> {
    let by_words = weak_descent_by_words(m, n, limits)?;
    let by_labeling = canon_polynomial_bruteforce(&Poset::chain(m), &Labeling::reverse(m), n, limits)?;
    if by_words != by_labeling {
        return Err(Error::InternalMismatch {
            what: format!("weak-descent polynomial at m={m} n={n}"),
            lhs: by_words.to_string(),
            rhs: by_labeling.to_string(),
        });
    }
    Ok(by_words)
}
