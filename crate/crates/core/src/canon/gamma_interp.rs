//! γ-coefficients of `C_n^m` as counts of extensions of the checked product
//! `[m] (x) [n]` filtered by their ρ-descents.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::canon_polynomial_bruteforce;
use crate::error::Result;
use crate::limits::Limits;
use crate::linext::{enumerate_linear_extensions, rho_descent_data, LinearExtension, RhoRule};
use crate::poly::{GammaExpansion, IntPolynomial};
use crate::poset::{checked_labeling, checked_product, Labeling, Poset};

/// The offset `floor((m + n - 1) / 2)` subtracted from ρ-descent counts.
pub fn stated_offset(m: usize, n: usize) -> usize {
    (m + n - 1) / 2
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaInterpretation {
    pub m: usize,
    pub n: usize,
    pub rule: RhoRule,
    pub stated_offset: usize,
    pub center_degree: usize,
    pub polynomial: IntPolynomial,
    pub expected: Option<GammaExpansion>,
    /// Qualifying extensions bucketed by their number of ρ-descents.
    pub histogram: Vec<u128>,
    /// `histogram[i + stated_offset]` for each γ index `i`.
    pub counts: Vec<u128>,
    pub matches_stated: bool,
    /// Every offset under which the histogram is exactly the γ-vector.
    pub matching_offsets: Vec<usize>,
    /// Qualifying extensions keyed by ρ-descent count.
    #[serde(skip)]
    pub classes: BTreeMap<usize, Vec<LinearExtension>>,
}

impl GammaInterpretation {
    /// γ index of the class containing `ext`, using the stated offset.
    pub fn class_of(&self, ext: &LinearExtension) -> Option<usize> {
        self.classes
            .iter()
            .find(|(_, members)| members.contains(ext))
            .and_then(|(&r, _)| r.checked_sub(self.stated_offset))
    }
}

/// The number of ρ-descents of `ext` if it has no double ρ-descent and
/// satisfies the final-pair condition; `None` otherwise.
pub fn qualifying_rho_descents(
    poset: &Poset,
    w: &Labeling,
    ext: &LinearExtension,
    rule: RhoRule,
) -> Result<Option<usize>> {
    let data = rho_descent_data(poset, w, ext, rule)?;
    Ok((data.doubles.is_empty() && data.final_pair_ascends_if_odd()).then_some(data.descents.len()))
}

pub fn gamma_interpretation_counts(
    m: usize,
    n: usize,
    rule: RhoRule,
    limits: &Limits,
) -> Result<GammaInterpretation> {
    let polynomial = canon_polynomial_bruteforce(&Poset::chain(m), &Labeling::identity(m), n, limits)?;
    let center_degree = m * (n - 1);
    let expected = polynomial.gamma_expansion(center_degree);

    let poset = checked_product(&Poset::chain(m), n);
    let w = checked_labeling(&Labeling::identity(m), n);
    let mut classes: BTreeMap<usize, Vec<LinearExtension>> = BTreeMap::new();
    for ext in enumerate_linear_extensions(&poset, limits)? {
        if let Some(r) = qualifying_rho_descents(&poset, &w, &ext, rule)? {
            classes.entry(r).or_default().push(ext);
        }
    }
    let mut histogram = vec![0u128; poset.len()];
    for (&r, members) in &classes {
        histogram[r] = members.len() as u128;
    }

    let offset = stated_offset(m, n);
    let gamma_len = center_degree / 2 + 1;
    let counts: Vec<u128> = (0..gamma_len).map(|i| histogram.get(i + offset).copied().unwrap_or(0)).collect();
    let matching_offsets = match &expected {
        Some(g) => (0..histogram.len()).filter(|&o| shifted_equals(&histogram, &g.gamma, o)).collect(),
        None => Vec::new(),
    };
    let matches_stated = matching_offsets.contains(&offset);
    Ok(GammaInterpretation {
        m,
        n,
        rule,
        stated_offset: offset,
        center_degree,
        polynomial,
        expected,
        histogram,
        counts,
        matches_stated,
        matching_offsets,
        classes,
    })
}

/// `histogram[r] == gamma[r - offset]` for every `r`, zero outside the range.
fn shifted_equals(histogram: &[u128], gamma: &[BigInt], offset: usize) -> bool {
    let zero = BigInt::from(0);
    (0..histogram.len().max(offset + gamma.len())).all(|r| {
        let h = BigInt::from(histogram.get(r).copied().unwrap_or(0));
        let g = r.checked_sub(offset).and_then(|i| gamma.get(i)).unwrap_or(&zero);
        &h == g
    })
}
