use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPolynomial;
use crate::error::Result;
use crate::limits::Limits;
use crate::linext::{all_dyck_paths, descent_histogram};
use crate::perm::next_permutation;
use crate::poset::{Labeling, Poset};

const EULERIAN_BRUTE_FORCE_MAX: usize = 10;

/// Descent polynomial of `S_n`. Counted over all permutations up to
/// `n = 10`, by the Eulerian recurrence above that.
pub fn eulerian(n: usize) -> IntPolynomial {
    if n > EULERIAN_BRUTE_FORCE_MAX {
        return eulerian_by_recurrence(n);
    }
    let mut counts = vec![0u128; n.max(1)];
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        counts[perm.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    IntPolynomial::from_counts(&counts)
}

/// `A(n, k) = (k + 1) A(n-1, k) + (n - k) A(n-1, k-1)`.
pub fn eulerian_by_recurrence(n: usize) -> IntPolynomial {
    let mut row = vec![BigInt::from(1)];
    for size in 2..=n {
        let mut next = vec![BigInt::zero(); size];
        for (k, slot) in next.iter_mut().enumerate() {
            if k < row.len() {
                *slot += &row[k] * BigInt::from(k + 1);
            }
            if k >= 1 {
                *slot += &row[k - 1] * BigInt::from(size - k);
            }
        }
        row = next;
    }
    IntPolynomial::from_big(row)
}

/// High-peak polynomial of the Dyck paths of semilength `n`.
pub fn narayana(n: usize) -> IntPolynomial {
    let mut counts = vec![0u128; n.max(1)];
    for path in all_dyck_paths(n) {
        counts[path.high_peak_count()] += 1;
    }
    IntPolynomial::from_counts(&counts)
}

/// Descent generating polynomial of the linear extensions of `(P, w)`.
pub fn hstar(poset: &Poset, w: &Labeling, limits: &Limits) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_counts(&descent_histogram(poset, w, limits)?))
}

/// Number of `(P, w)`-partitions into `{0, ..., j}` for `j = 0..=j_max`,
/// counted over all maps. A map `f` qualifies when `f(s) <= f(t)` for every
/// `s < t`, strictly whenever `w(s) > w(t)`.
pub fn order_polynomial_values(
    poset: &Poset,
    w: &Labeling,
    j_max: usize,
    limits: &Limits,
) -> Result<Vec<u128>> {
    limits.check_poset(poset)?;
    w.check_size(poset.len())?;
    let relations: Vec<(usize, usize, bool)> = poset
        .strict_relations()
        .into_iter()
        .map(|(s, t)| (s, t, w.label(s) > w.label(t)))
        .collect();
    let n = poset.len();
    let mut values = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let mut f = vec![0usize; n];
        let mut count = 0u128;
        loop {
            let ok = relations
                .iter()
                .all(|&(s, t, strict)| if strict { f[s] < f[t] } else { f[s] <= f[t] });
            count += u128::from(ok);
            // odometer over {0..=j}^n
            let mut i = 0;
            while i < n && f[i] == j {
                f[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            f[i] += 1;
        }
        values.push(count);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{canon_labeling, product_with_chain};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian(1), p(&[1]));
        assert_eq!(eulerian(2), p(&[1, 1]));
        assert_eq!(eulerian(3), p(&[1, 4, 1]));
        assert_eq!(eulerian(4), p(&[1, 11, 11, 1]));
    }

    #[test]
    fn eulerian_routes_agree() {
        for n in 1..=8 {
            assert_eq!(eulerian(n), eulerian_by_recurrence(n), "n = {n}");
            assert!(eulerian(n).is_palindromic(0, n - 1));
        }
        assert_eq!(eulerian(12).degree(), Some(11));
    }

    #[test]
    fn narayana_small() {
        assert_eq!(narayana(1), p(&[1]));
        assert_eq!(narayana(2), p(&[1, 1]));
        assert_eq!(narayana(3), p(&[1, 3, 1]));
    }

    #[test]
    fn narayana_closed_form() {
        // N(n, k) = C(n, k) C(n, k+1) / n counts paths with k high peaks
        fn binom(n: u128, k: u128) -> u128 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for n in 1..=8u128 {
            let expected: Vec<u128> = (0..n).map(|k| binom(n, k) * binom(n, k + 1) / n).collect();
            assert_eq!(narayana(n as usize), IntPolynomial::from_counts(&expected));
            assert!(narayana(n as usize).is_palindromic(0, n as usize - 1));
        }
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(hstar(&Poset::chain(4), &Labeling::identity(4), &lim()).unwrap(), p(&[1]));
        assert_eq!(hstar(&Poset::antichain(2), &Labeling::identity(2), &lim()).unwrap(), p(&[1, 1]));
        let prod = product_with_chain(&Poset::chain(2), 3);
        assert_eq!(hstar(&prod, &Labeling::identity(6), &lim()).unwrap(), p(&[1, 3, 1]));
        let rev = canon_labeling(&Labeling::identity(2), &Labeling::reverse(3));
        assert_eq!(hstar(&prod, &rev, &lim()).unwrap(), p(&[0, 0, 1, 3, 1]));
    }

    #[test]
    fn narayana_is_hstar_of_two_row_product() {
        for n in 1..=7 {
            let prod = product_with_chain(&Poset::chain(2), n);
            assert_eq!(hstar(&prod, &Labeling::identity(2 * n), &lim()).unwrap(), narayana(n));
        }
    }

    #[test]
    fn order_polynomial_examples() {
        let c2 = Poset::chain(2);
        assert_eq!(order_polynomial_values(&c2, &Labeling::identity(2), 2, &lim()).unwrap(), vec![1, 3, 6]);
        assert_eq!(order_polynomial_values(&c2, &Labeling::reverse(2), 2, &lim()).unwrap(), vec![0, 1, 3]);
        let a2 = Poset::antichain(2);
        let vals = order_polynomial_values(&a2, &Labeling::identity(2), 5, &lim()).unwrap();
        assert_eq!(vals, (1..=6u128).map(|j| j * j).collect::<Vec<_>>());
    }
}
