//! Canon polynomials and the identities relating them to `h*`-polynomials of
//! products with chains.
//!
//! The sums over `S_n` are the reference computations; the product
//! formulas are what gets checked against them.

mod amphibian;
mod gamma_interp;
mod sweep;
mod weak;

pub use amphibian::{
    dissonant_degree_check, dissonant_palindromy_check, dissonant_polynomial, dissonant_shift_check,
    dissonant_summand, multiset_interpretation_check, AmphibianSpec, DegreeReport, DegreeWitness,
    Mode, MultisetReport, PalindromyReport,
};
pub use gamma_interp::{
    gamma_interpretation_counts, qualifying_rho_descents, stated_offset, GammaInterpretation,
};
pub use sweep::{conjecture_sweep, Certificate, SweepReport, SweepRow};
pub use weak::{canon_words, weak_descent_by_words, weak_descent_polynomial};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linext::enumerate_linear_extensions;
use crate::perm::permutations;
use crate::poly::{eulerian, hstar, IntPolynomial};
use crate::poset::{
    canon_labeling, checked_labeling, checked_product, product_with_chain, Labeling, Poset,
};

/// Two polynomials that a statement says are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub holds: bool,
    /// First differing coefficient, when there is one.
    pub witness: Option<String>,
}

impl IdentityReport {
    pub fn compare(name: impl Into<String>, lhs: IntPolynomial, rhs: IntPolynomial) -> Self {
        let len = lhs.coeffs().len().max(rhs.coeffs().len());
        let witness = (0..len).find(|&i| lhs.coeff(i) != rhs.coeff(i)).map(|i| {
            format!("coefficient of x^{i}: {} vs {}", lhs.coeff(i), rhs.coeff(i))
        });
        IdentityReport { name: name.into(), holds: witness.is_none(), lhs, rhs, witness }
    }

    /// Checks `x^high p(1/x) = p(x)`.
    pub fn palindromy(name: impl Into<String>, p: &IntPolynomial, high: usize) -> Self {
        match p.reflect(high) {
            Some(r) => IdentityReport::compare(name, r, p.clone()),
            None => IdentityReport {
                name: name.into(),
                lhs: IntPolynomial::zero(),
                rhs: p.clone(),
                holds: false,
                witness: Some(format!("degree {:?} exceeds x^{high}", p.degree())),
            },
        }
    }
}

pub(crate) fn x_pow(k: usize) -> IntPolynomial {
    IntPolynomial::monomial(BigInt::from(1), k)
}

/// Sum of `h*(poset, w x sigma)` over all `sigma` in `S_n`, where `poset`
/// lives on the product layout of a `|w|`-element base and `[n]`.
pub(crate) fn sum_over_permutations(
    poset: &Poset,
    w: &Labeling,
    n: usize,
    limits: &Limits,
) -> Result<IntPolynomial> {
    let sigmas: Vec<Labeling> = permutations(n).collect();
    sigmas
        .par_iter()
        .map(|sigma| hstar(poset, &canon_labeling(w, sigma), limits))
        .try_reduce(IntPolynomial::zero, |a, b| Ok(a + b))
}

fn check_labeling(base: &Poset, w: &Labeling) -> Result<()> {
    if w.len() != base.len() {
        return Err(Error::SizeMismatch { expected: base.len(), found: w.len() });
    }
    Ok(())
}

/// `C_n^{P,w}` straight from the definition: the sum over `S_n` of the
/// descent polynomials of `(P x [n], w x sigma)`.
pub fn canon_polynomial_bruteforce(
    base: &Poset,
    w: &Labeling,
    n: usize,
    limits: &Limits,
) -> Result<IntPolynomial> {
    check_labeling(base, w)?;
    limits.check_brute_force(base.len(), n)?;
    sum_over_permutations(&product_with_chain(base, n), w, n, limits)
}

/// `x^k A_n(x) h*_{P x [n]}(x)`, defined when every maximal chain of
/// `(P, w)` has the same number `k` of descents.
pub fn canon_polynomial_product(
    base: &Poset,
    w: &Labeling,
    n: usize,
    limits: &Limits,
) -> Result<IntPolynomial> {
    check_labeling(base, w)?;
    let k = base.constant_chain_descents(w)?.ok_or(Error::NonConstantDescents)?;
    let product = product_with_chain(base, n);
    let h = hstar(&product, &Labeling::natural(&product), limits)?;
    Ok(&(&x_pow(k) * &eulerian(n)) * &h)
}

/// Brute force against the product formula.
pub fn product_identity(base: &Poset, w: &Labeling, n: usize, limits: &Limits) -> Result<IdentityReport> {
    Ok(IdentityReport::compare(
        "canon polynomial = x^k A_n h*",
        canon_polynomial_bruteforce(base, w, n, limits)?,
        canon_polynomial_product(base, w, n, limits)?,
    ))
}

/// The canon polynomial against `h*` of the checked product under the
/// checked labeling.
pub fn checked_product_identity(
    base: &Poset,
    w: &Labeling,
    n: usize,
    limits: &Limits,
) -> Result<IdentityReport> {
    let lhs = canon_polynomial_bruteforce(base, w, n, limits)?;
    let rhs = hstar(&checked_product(base, n), &checked_labeling(w, n), limits)?;
    Ok(IdentityReport::compare("canon polynomial = h* of checked product", lhs, rhs))
}

/// Sums `h*(P x [n], w x sigma)` over the words `sigma` of the extensions of
/// a naturally labeled `P'` on `n` elements, against
/// `x^k h*_{P'} h*_{P x [n]}`.
pub fn generalized_product_identity(
    base: &Poset,
    w: &Labeling,
    index: &Poset,
    limits: &Limits,
) -> Result<IdentityReport> {
    check_labeling(base, w)?;
    let n = index.len();
    limits.check_brute_force(base.len(), n)?;
    let k = base.constant_chain_descents(w)?.ok_or(Error::NonConstantDescents)?;
    let natural = Labeling::natural(index);
    let sigmas = enumerate_linear_extensions(index, limits)?
        .into_iter()
        .map(|e| Labeling::new(e.word(&natural)))
        .collect::<Result<Vec<_>>>()?;
    let product = product_with_chain(base, n);
    let lhs = sigmas
        .par_iter()
        .map(|sigma| hstar(&product, &canon_labeling(w, sigma), limits))
        .try_reduce(IntPolynomial::zero, |a, b| Ok(a + b))?;
    let h_index = hstar(index, &natural, limits)?;
    let h_product = hstar(&product, &Labeling::natural(&product), limits)?;
    let rhs = &(&x_pow(k) * &h_index) * &h_product;
    Ok(IdentityReport::compare("sum over L(P') = x^k h*_{P'} h*", lhs, rhs))
}

/// Palindromy window `(k, k + |P| n - 1 - rank(P))` of `C_n^{P,w}` for a
/// graded `P` whose maximal chains all carry `k` descents.
pub fn canon_window(base: &Poset, w: &Labeling, n: usize) -> Result<Option<(usize, usize)>> {
    check_labeling(base, w)?;
    let Some(k) = base.constant_chain_descents(w)? else {
        return Ok(None);
    };
    let Some(rank) = base.rank() else {
        return Ok(None);
    };
    Ok(Some((k, k + base.len() * n - 1 - rank)))
}

/// `0 < 1, 0 < 2`.
pub fn v_poset() -> Poset {
    Poset::new(3, [(0, 1), (0, 2)]).expect("valid covers")
}

/// `0 < 2, 1 < 2`.
pub fn lambda_poset() -> Poset {
    Poset::new(3, [(0, 2), (1, 2)]).expect("valid covers")
}

/// The small bases the product identities are routinely run on.
pub fn standard_bases() -> Vec<(&'static str, Poset)> {
    vec![
        ("chain-1", Poset::chain(1)),
        ("chain-2", Poset::chain(2)),
        ("chain-3", Poset::chain(3)),
        ("v", v_poset()),
        ("lambda", lambda_poset()),
    ]
}

/// Every labeling of `base` whose maximal chains share a descent count.
pub fn constant_descent_labelings(base: &Poset) -> Result<Vec<(Labeling, usize)>> {
    let mut out = Vec::new();
    for w in permutations(base.len()) {
        if let Some(k) = base.constant_chain_descents(&w)? {
            out.push((w, k));
        }
    }
    Ok(out)
}
