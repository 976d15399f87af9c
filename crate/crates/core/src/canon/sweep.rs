//! Exhaustive γ-positivity search over every amphibian subposet of
//! `[m] x [n]`.

use rayon::prelude::*;
use serde::Serialize;

use super::{dissonant_polynomial, AmphibianSpec, Mode};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{GammaExpansion, IntPolynomial};
use crate::poset::{Labeling, PosetFile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub mask: u64,
    pub spec: AmphibianSpec,
    pub mode: Mode,
    pub polynomial: IntPolynomial,
    pub window: (usize, usize),
    pub palindromic: bool,
    pub degree: Option<usize>,
    pub gamma: Option<GammaExpansion>,
    pub gamma_positive: bool,
    pub unimodal: bool,
}

impl SweepRow {
    pub fn violation(&self) -> Option<String> {
        match &self.gamma {
            None => Some(format!("not palindromic over {}..{}", self.window.0, self.window.1)),
            Some(g) => g.first_negative().map(|i| format!("gamma-negative at index {i}")),
        }
    }
}

/// A subposet whose dissonant polynomial is not γ-positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub spec: AmphibianSpec,
    pub poset: PosetFile,
    pub polynomial: IntPolynomial,
    pub gamma: Vec<String>,
    pub violation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<SweepRow>,
    pub certificates: Vec<Certificate>,
    pub gamma_negative: usize,
    pub non_palindromic: usize,
}

impl SweepReport {
    /// Cross-checks the report against itself: one row per edge subset in
    /// mask order, every γ-vector reconstructs its polynomial, the flags
    /// agree with the data, and there is a certificate for each violator.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let expected_rows = 1u64 << AmphibianSpec::removable_count(self.m, self.n);
        if self.rows.len() as u64 != expected_rows {
            return Err(format!("{} rows, expected {expected_rows}", self.rows.len()));
        }
        let mut violators = 0;
        for (i, row) in self.rows.iter().enumerate() {
            if row.mask != i as u64 || row.spec.mask() != row.mask {
                return Err(format!("row {i} has mask {}", row.mask));
            }
            if row.palindromic != row.polynomial.is_palindromic(row.window.0, row.window.1) {
                return Err(format!("row {i}: palindromic flag is wrong"));
            }
            match &row.gamma {
                Some(g) if g.reconstruct() != row.polynomial => {
                    return Err(format!("row {i}: gamma does not reconstruct the polynomial"))
                }
                Some(g) if g.is_positive() != row.gamma_positive => {
                    return Err(format!("row {i}: gamma_positive flag is wrong"))
                }
                None if row.palindromic || row.gamma_positive => {
                    return Err(format!("row {i}: palindromic but no gamma"))
                }
                _ => {}
            }
            if row.unimodal != row.polynomial.is_unimodal() {
                return Err(format!("row {i}: unimodal flag is wrong"));
            }
            violators += usize::from(row.violation().is_some());
        }
        if violators != self.certificates.len() {
            return Err(format!("{violators} violators, {} certificates", self.certificates.len()));
        }
        Ok(())
    }

    pub fn all_gamma_positive(&self) -> bool {
        self.certificates.is_empty()
    }
}

/// Computes `C^{Q,id}` for all `2^{m(n-1)}` subsets of removed inter-copy
/// covers, with its palindromy over `0..m(n-1)`, γ-vector and unimodality.
pub fn conjecture_sweep(m: usize, n: usize, limits: &Limits) -> Result<SweepReport> {
    if m == 0 || n == 0 {
        return Err(Error::WrongShape(format!("need m, n >= 1, got m={m} n={n}")));
    }
    limits.check_brute_force(m, n)?;
    let edges = AmphibianSpec::removable_count(m, n);
    if edges >= 64 {
        return Err(Error::CapExceeded { size: edges, cap: 63 });
    }
    let w = Labeling::identity(m);
    let center = m * (n - 1);
    let rows: Vec<SweepRow> = (0..1u64 << edges)
        .into_par_iter()
        .map(|mask| {
            let spec = AmphibianSpec::from_mask(m, n, mask);
            let polynomial = dissonant_polynomial(&spec, &w, limits)?;
            let gamma = polynomial.gamma_expansion(center);
            Ok(SweepRow {
                mask,
                mode: spec.mode(),
                window: (0, center),
                palindromic: polynomial.is_palindromic(0, center),
                degree: polynomial.degree(),
                gamma_positive: gamma.as_ref().is_some_and(GammaExpansion::is_positive),
                unimodal: polynomial.is_unimodal(),
                gamma,
                polynomial,
                spec,
            })
        })
        .collect::<Result<_>>()?;

    let certificates: Vec<Certificate> = rows
        .iter()
        .filter_map(|row| {
            row.violation().map(|violation| Certificate {
                spec: row.spec.clone(),
                poset: PosetFile::from_poset(&row.spec.poset(), Some(&Labeling::identity(m * n))),
                polynomial: row.polynomial.clone(),
                gamma: row.gamma.as_ref().map(GammaExpansion::to_decimal_strings).unwrap_or_default(),
                violation,
            })
        })
        .collect();
    let gamma_negative = rows.iter().filter(|r| r.gamma.as_ref().is_some_and(|g| !g.is_positive())).count();
    let non_palindromic = rows.iter().filter(|r| !r.palindromic).count();
    Ok(SweepReport { m, n, rows, certificates, gamma_negative, non_palindromic })
}
