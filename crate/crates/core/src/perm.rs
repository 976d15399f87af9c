//! Permutation iteration helpers.

use crate::poset::Labeling;

/// Rearranges `v` into its lexicographic successor; returns `false` (leaving
/// `v` sorted ascending) when `v` was the last arrangement. Repeated values
/// are handled, so this walks multiset permutations without duplicates.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some((1..=n).collect()) }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Labeling::new(current).expect("permutation of 1..=n"))
    }
}

/// All distinct arrangements of `{1^m, ..., n^m}` in lexicographic order.
pub fn multiset_permutations(m: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> =
        Some((1..=n).flat_map(|v| std::iter::repeat_n(v, m)).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        Some(current)
    })
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
