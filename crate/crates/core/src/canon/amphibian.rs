//! Subposets of `[m] x [n]` with some inter-copy covers deleted, and their
//! dissonant canon polynomials.

use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{sum_over_permutations, x_pow, IdentityReport};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linext::{descent_count, for_each_extension, phi};
use crate::perm::{multiset_permutations, permutations};
use crate::poly::{hstar, IntPolynomial};
use crate::poset::{
    canon_labeling, product_with_chain, remove_intercopy_covers, InterCopyEdge, Labeling, Poset,
};

/// `[m] x [n]` minus a set of inter-copy covers `(p, j) < (p, j + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AmphibianSpec {
    pub m: usize,
    pub n: usize,
    /// Sorted, without repeats.
    pub removed: Vec<InterCopyEdge>,
}

/// Whether one row keeps all its inter-copy covers. If row `q` does, the
/// order of the `q`-th occurrences pins down `sigma`, so each multiset
/// permutation is counted at most once across the sum over `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    RowFixed { row: usize },
    Unrestricted,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::RowFixed { row } => write!(f, "row-fixed:{row}"),
            Mode::Unrestricted => f.write_str("unrestricted"),
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl AmphibianSpec {
    pub fn new(m: usize, n: usize, mut removed: Vec<InterCopyEdge>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::WrongShape(format!("need m, n >= 1, got m={m} n={n}")));
        }
        for e in &removed {
            if e.p == 0 || e.p > m || e.j == 0 || e.j >= n {
                return Err(Error::UnknownEdge { p: e.p, j: e.j });
            }
        }
        removed.sort_unstable();
        removed.dedup();
        Ok(AmphibianSpec { m, n, removed })
    }

    pub fn full(m: usize, n: usize) -> Self {
        AmphibianSpec { m, n, removed: Vec::new() }
    }

    pub fn removable_count(m: usize, n: usize) -> usize {
        m * n.saturating_sub(1)
    }

    /// Bit `i` of `mask` removes the `i`-th edge of [`InterCopyEdge::all`].
    pub fn from_mask(m: usize, n: usize, mask: u64) -> Self {
        let removed = InterCopyEdge::all(m, n)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        AmphibianSpec { m, n, removed }
    }

    pub fn mask(&self) -> u64 {
        InterCopyEdge::all(self.m, self.n)
            .iter()
            .enumerate()
            .filter(|(_, e)| self.removed.contains(e))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn poset(&self) -> Poset {
        let product = product_with_chain(&Poset::chain(self.m), self.n);
        remove_intercopy_covers(&product, self.m, &self.removed).expect("edges validated on construction")
    }

    pub fn mode(&self) -> Mode {
        (1..=self.m)
            .find(|&p| self.removed.iter().all(|e| e.p != p))
            .map_or(Mode::Unrestricted, |row| Mode::RowFixed { row })
    }

    fn check_labeling(&self, w: &Labeling) -> Result<()> {
        if w.len() != self.m {
            return Err(Error::SizeMismatch { expected: self.m, found: w.len() });
        }
        Ok(())
    }
}

impl fmt::Display for AmphibianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let removed: Vec<String> = self.removed.iter().map(ToString::to_string).collect();
        write!(f, "m={} n={} removed=[{}]", self.m, self.n, removed.join(","))
    }
}

/// `h*(Q, w x sigma)` for one `sigma`.
pub fn dissonant_summand(
    spec: &AmphibianSpec,
    w: &Labeling,
    sigma: &Labeling,
    limits: &Limits,
) -> Result<IntPolynomial> {
    spec.check_labeling(w)?;
    if sigma.len() != spec.n {
        return Err(Error::SizeMismatch { expected: spec.n, found: sigma.len() });
    }
    hstar(&spec.poset(), &canon_labeling(w, sigma), limits)
}

/// `C^{Q,w}`: the sum of the summands over all of `S_n`.
pub fn dissonant_polynomial(spec: &AmphibianSpec, w: &Labeling, limits: &Limits) -> Result<IntPolynomial> {
    spec.check_labeling(w)?;
    limits.check_brute_force(spec.m, spec.n)?;
    sum_over_permutations(&spec.poset(), w, spec.n, limits)
}

/// Per `sigma`: `h*(Q, w x sigma) = x^k h*(Q, id x sigma)` with `k = des(w)`.
pub fn dissonant_shift_check(
    spec: &AmphibianSpec,
    w: &Labeling,
    limits: &Limits,
) -> Result<Vec<IdentityReport>> {
    spec.check_labeling(w)?;
    limits.check_brute_force(spec.m, spec.n)?;
    let q = spec.poset();
    let id = Labeling::identity(spec.m);
    let shift = x_pow(w.descents());
    let sigmas: Vec<Labeling> = permutations(spec.n).collect();
    sigmas
        .par_iter()
        .map(|sigma| {
            let lhs = hstar(&q, &canon_labeling(w, sigma), limits)?;
            let rhs = &shift * &hstar(&q, &canon_labeling(&id, sigma), limits)?;
            Ok(IdentityReport::compare(format!("sigma={}", fmt_perm(sigma)), lhs, rhs))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeWitness {
    pub sigma: Labeling,
    pub order: Vec<usize>,
    pub word: Vec<usize>,
    pub descents: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub spec: AmphibianSpec,
    pub w: Labeling,
    pub k: usize,
    pub expected: usize,
    pub degree: Option<usize>,
    /// An extension attaining the expected descent count, if any does.
    pub witness: Option<DegreeWitness>,
    pub holds: bool,
}

/// Checks `deg C^{Q,w} = m(n - 1) + k` and searches for an extension with
/// that many descents.
pub fn dissonant_degree_check(spec: &AmphibianSpec, w: &Labeling, limits: &Limits) -> Result<DegreeReport> {
    let poly = dissonant_polynomial(spec, w, limits)?;
    let k = w.descents();
    let expected = spec.m * (spec.n - 1) + k;
    let q = spec.poset();
    let mut witness = None;
    for sigma in permutations(spec.n) {
        let labels = canon_labeling(w, &sigma);
        let mut found = None;
        let flow = for_each_extension(&q, limits, |order| {
            let word: Vec<usize> = order.iter().map(|&e| labels.label(e)).collect();
            let d = descent_count(&word);
            if d == expected {
                found = Some((order.to_vec(), word, d));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        if let (ControlFlow::Break(()), Some((order, word, descents))) = (flow, found) {
            witness = Some(DegreeWitness { sigma, order, word, descents });
            break;
        }
    }
    let degree = poly.degree();
    Ok(DegreeReport {
        spec: spec.clone(),
        w: w.clone(),
        k,
        expected,
        degree,
        holds: degree == Some(expected) && witness.is_some(),
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PalindromyReport {
    pub spec: AmphibianSpec,
    pub mode: Mode,
    pub w: Labeling,
    pub k: usize,
    pub window: (usize, usize),
    /// `x^{m(n-1)+2k} C(1/x) = C(x)`.
    pub identity: IdentityReport,
    /// Per `sigma`: `x^{des w} x^{mn-1} h_sigma(1/x) = x^{des phi(w)} h_{phi(sigma)}(x)`.
    pub summands: Vec<IdentityReport>,
    pub holds: bool,
}

pub fn dissonant_palindromy_check(
    spec: &AmphibianSpec,
    w: &Labeling,
    limits: &Limits,
) -> Result<PalindromyReport> {
    spec.check_labeling(w)?;
    limits.check_brute_force(spec.m, spec.n)?;
    let q = spec.poset();
    let k = w.descents();
    let high = spec.m * (spec.n - 1) + 2 * k;
    let top = spec.m * spec.n - 1;
    let w_phi = phi(w);
    let sigmas: Vec<Labeling> = permutations(spec.n).collect();
    let terms: Vec<(IntPolynomial, IdentityReport)> = sigmas
        .par_iter()
        .map(|sigma| {
            let h = hstar(&q, &canon_labeling(w, sigma), limits)?;
            let h_phi = hstar(&q, &canon_labeling(w, &phi(sigma)), limits)?;
            let lhs = &x_pow(k) * &h.reflect(top).expect("at most mn - 1 descents");
            let rhs = &x_pow(w_phi.descents()) * &h_phi;
            Ok((h, IdentityReport::compare(format!("sigma={}", fmt_perm(sigma)), lhs, rhs)))
        })
        .collect::<Result<_>>()?;
    let total: IntPolynomial = terms.iter().map(|(h, _)| h).sum();
    let summands: Vec<IdentityReport> = terms.into_iter().map(|(_, r)| r).collect();
    let identity = IdentityReport::palindromy(format!("x^{high} C(1/x) = C(x)"), &total, high);
    let holds = identity.holds && summands.iter().all(|r| r.holds);
    Ok(PalindromyReport {
        spec: spec.clone(),
        mode: spec.mode(),
        w: w.clone(),
        k,
        window: (0, high),
        identity,
        summands,
        holds,
    })
}

/// `C^{Q,id}` and `C^{Q,u}` read as descent and weak-descent polynomials of
/// the multiset permutations of `{1^m, ..., n^m}` that respect the kept
/// inter-copy covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultisetReport {
    pub spec: AmphibianSpec,
    pub mode: Mode,
    pub natural: IntPolynomial,
    pub reversed: IntPolynomial,
    pub word_descents: IntPolynomial,
    pub word_weak_descents: IntPolynomial,
    /// Largest number of `sigma` under which a single word is admissible.
    pub max_multiplicity: usize,
    pub natural_window: (usize, usize),
    pub reversed_window: (usize, usize),
    pub natural_palindromic: bool,
    pub reversed_palindromic: bool,
    pub holds: bool,
}

pub fn multiset_interpretation_check(spec: &AmphibianSpec, limits: &Limits) -> Result<MultisetReport> {
    let (m, n) = (spec.m, spec.n);
    let natural = dissonant_polynomial(spec, &Labeling::identity(m), limits)?;
    let reversed = dissonant_polynomial(spec, &Labeling::reverse(m), limits)?;
    let kept: Vec<InterCopyEdge> =
        InterCopyEdge::all(m, n).into_iter().filter(|e| !spec.removed.contains(e)).collect();
    let sigmas: Vec<Vec<usize>> = permutations(n).map(|s| s.values().to_vec()).collect();

    let mut des = vec![0u128; m * n];
    let mut wdes = vec![0u128; m * n];
    let mut max_multiplicity = 0;
    for word in multiset_permutations(m, n) {
        // occurrence[letter - 1][i] = position of the (i+1)-th copy of letter
        let mut occurrence = vec![Vec::with_capacity(m); n];
        for (pos, &letter) in word.iter().enumerate() {
            occurrence[letter - 1].push(pos);
        }
        let multiplicity = sigmas
            .iter()
            .filter(|sigma| {
                kept.iter().all(|e| {
                    occurrence[sigma[e.j - 1] - 1][e.p - 1] < occurrence[sigma[e.j] - 1][e.p - 1]
                })
            })
            .count();
        max_multiplicity = max_multiplicity.max(multiplicity);
        let d = word.windows(2).filter(|p| p[0] > p[1]).count();
        let wd = word.windows(2).filter(|p| p[0] >= p[1]).count();
        des[d] += multiplicity as u128;
        wdes[wd] += multiplicity as u128;
    }

    let mode = spec.mode();
    let natural_window = (0, m * (n - 1));
    let reversed_window = (0, m * (n + 1) - 2);
    let word_descents = IntPolynomial::from_counts(&des);
    let word_weak_descents = IntPolynomial::from_counts(&wdes);
    let natural_palindromic = natural.is_palindromic(natural_window.0, natural_window.1);
    let reversed_palindromic = reversed.is_palindromic(reversed_window.0, reversed_window.1);
    let holds = natural == word_descents
        && reversed == word_weak_descents
        && natural_palindromic
        && reversed_palindromic
        && (mode == Mode::Unrestricted || max_multiplicity <= 1);
    Ok(MultisetReport {
        spec: spec.clone(),
        mode,
        natural,
        reversed,
        word_descents,
        word_weak_descents,
        max_multiplicity,
        natural_window,
        reversed_window,
        natural_palindromic,
        reversed_palindromic,
        holds,
    })
}

fn fmt_perm(sigma: &Labeling) -> String {
    let sep = if sigma.len() > 9 { "," } else { "" };
    sigma.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canon_polynomial_bruteforce;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().copied())
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn spec_validation_and_masks() {
        assert!(AmphibianSpec::new(2, 2, vec![InterCopyEdge::new(3, 1)]).is_err());
        assert!(AmphibianSpec::new(2, 2, vec![InterCopyEdge::new(1, 2)]).is_err());
        let s = AmphibianSpec::new(2, 3, vec![InterCopyEdge::new(2, 1), InterCopyEdge::new(1, 2)]).unwrap();
        // row-major: 1:1, 1:2, 2:1, 2:2
        assert_eq!(s.mask(), 0b0110);
        assert_eq!(AmphibianSpec::from_mask(2, 3, 0b0110), s);
        assert_eq!(s.mode(), Mode::Unrestricted);
        assert_eq!(AmphibianSpec::from_mask(2, 3, 0b1100).mode(), Mode::RowFixed { row: 1 });
        assert_eq!(AmphibianSpec::full(3, 2).mode().to_string(), "row-fixed:1");
    }

    #[test]
    fn removing_one_edge() {
        let s = AmphibianSpec::new(2, 2, vec![InterCopyEdge::new(2, 1)]).unwrap();
        assert_eq!(s.poset().covers().len(), 3);
        assert_eq!(dissonant_polynomial(&s, &Labeling::identity(2), &lim()).unwrap(), p(&[1, 4, 1]));
    }

    #[test]
    fn nothing_removed_is_the_canon_polynomial() {
        for (m, n) in [(2, 2), (2, 3), (3, 2)] {
            let w = Labeling::identity(m);
            assert_eq!(
                dissonant_polynomial(&AmphibianSpec::full(m, n), &w, &lim()).unwrap(),
                canon_polynomial_bruteforce(&Poset::chain(m), &w, n, &lim()).unwrap()
            );
        }
    }

    #[test]
    fn two_summands_of_two_by_three() {
        let s = AmphibianSpec::full(2, 3);
        let id = Labeling::identity(2);
        let a = dissonant_summand(&s, &id, &Labeling::identity(3), &lim()).unwrap();
        let b = dissonant_summand(&s, &id, &Labeling::reverse(3), &lim()).unwrap();
        let sum = &a + &b;
        assert_eq!(sum, &p(&[1, 3, 1]) * &p(&[1, 0, 1]));
        assert!(!sum.is_unimodal());
    }

    #[test]
    fn degree_and_palindromy_small() {
        for mask in 0..16 {
            let s = AmphibianSpec::from_mask(2, 3, mask);
            for w in [Labeling::identity(2), Labeling::reverse(2)] {
                let d = dissonant_degree_check(&s, &w, &lim()).unwrap();
                assert!(d.holds, "{d:?}");
                let r = dissonant_palindromy_check(&s, &w, &lim()).unwrap();
                assert!(r.holds, "{r:?}");
            }
        }
        let r = dissonant_palindromy_check(&AmphibianSpec::full(2, 2), &Labeling::reverse(2), &lim()).unwrap();
        assert_eq!(r.window, (0, 4));
    }

    #[test]
    fn shift_per_summand() {
        for mask in 0..8 {
            let s = AmphibianSpec::from_mask(3, 2, mask);
            for w in permutations(3) {
                assert!(dissonant_shift_check(&s, &w, &lim()).unwrap().iter().all(|r| r.holds));
            }
        }
    }

    #[test]
    fn multiset_reading() {
        // all of row 2 removed: every word of {1,1,2,2} counted once
        let s = AmphibianSpec::from_mask(2, 2, 0b10);
        let r = multiset_interpretation_check(&s, &lim()).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.max_multiplicity, 1);
        assert_eq!(r.natural, p(&[1, 4, 1]));
        for mask in 0..16 {
            let r = multiset_interpretation_check(&AmphibianSpec::from_mask(2, 3, mask), &lim()).unwrap();
            assert!(r.holds, "{r:?}");
        }
    }
}
