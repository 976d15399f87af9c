//! Named checks, each covering one identity or law, run over concrete
//! instances and reported uniformly.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::{
    self, canon_polynomial_bruteforce, canon_window, checked_product_identity,
    constant_descent_labelings, dissonant_degree_check, dissonant_palindromy_check,
    dissonant_shift_check, gamma_interpretation_counts, generalized_product_identity,
    multiset_interpretation_check, product_identity, weak_descent_by_words, weak_descent_polynomial,
    AmphibianSpec, IdentityReport,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linext::{
    all_dyck_paths, descent_set, dyck_from_linext, enumerate_linear_extensions, linext_from_dyck,
    RhoRule,
};
use crate::perm::permutations;
use crate::poly::{eulerian, hstar, narayana};
use crate::poset::{
    canon_labeling, descent_shift_vector, product_with_chain, InterCopyEdge, Labeling, Poset,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `C_n^2 = A_n N_n`, palindromic.
    CanonNarayana,
    /// Natural labeling: `C_n^{P,w} = A_n h*_{P x [n]}`, palindromic if graded.
    NaturalProduct,
    /// Extensions of `[2] x [n]` are Dyck paths; descents are high peaks.
    NarayanaDyck,
    /// Equal chain descent counts `k` give `h*_{P,w} = x^k h*_P`.
    Shift,
    /// Constant-descent labeling: `C_n^{P,w} = x^k A_n h*_{P x [n]}`.
    LabeledProduct,
    /// `C_n^{P,w}` is `h*` of the checked product.
    CheckedProduct,
    /// Sum over the extensions of an index poset `P'`.
    GeneralizedProduct,
    /// `h*_{Q, w x sigma} = x^k h*_{Q, id x sigma}`.
    DissonantShift,
    /// `deg C^{Q,w} = m(n-1) + k`.
    DissonantDegree,
    /// `x^{m(n-1)+2k} C^{Q,w}(1/x) = C^{Q,w}(x)`.
    DissonantPalindromy,
    /// γ-coefficients of `C_n^m` count extensions by ρ-descents.
    GammaInterpretation,
    /// Weak descents of canon permutations give `x^{m-1} C_n^m`.
    WeakDescent,
    /// Multiset-permutation reading of `C^{Q,id}` and `C^{Q,u}`.
    MultisetPalindromy,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::CanonNarayana,
        Claim::NaturalProduct,
        Claim::NarayanaDyck,
        Claim::Shift,
        Claim::LabeledProduct,
        Claim::CheckedProduct,
        Claim::GeneralizedProduct,
        Claim::DissonantShift,
        Claim::DissonantDegree,
        Claim::DissonantPalindromy,
        Claim::GammaInterpretation,
        Claim::WeakDescent,
        Claim::MultisetPalindromy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::CanonNarayana => "canon-narayana",
            Claim::NaturalProduct => "natural-product",
            Claim::NarayanaDyck => "narayana-dyck",
            Claim::Shift => "shift",
            Claim::LabeledProduct => "labeled-product",
            Claim::CheckedProduct => "checked-product",
            Claim::GeneralizedProduct => "generalized-product",
            Claim::DissonantShift => "dissonant-shift",
            Claim::DissonantDegree => "dissonant-degree",
            Claim::DissonantPalindromy => "dissonant-palindromy",
            Claim::GammaInterpretation => "gamma-interpretation",
            Claim::WeakDescent => "weak-descent",
            Claim::MultisetPalindromy => "multiset-palindromy",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Claim::CanonNarayana => "C_n^2 = A_n N_n, palindromic over 0..2(n-1)",
            Claim::NaturalProduct => "natural w: C_n^{P,w} = A_n h*_{P x [n]}, palindromic if P is graded",
            Claim::NarayanaDyck => "L([2] x [n]) <-> Dyck paths, descents <-> high peaks, h* = N_n",
            Claim::Shift => "k descents on every maximal chain: h*_{P,w} = x^k h*_P",
            Claim::LabeledProduct => "k descents on every maximal chain: C_n^{P,w} = x^k A_n h*_{P x [n]}",
            Claim::CheckedProduct => "C_n^{P,w} = h* of the checked product under the checked labeling",
            Claim::GeneralizedProduct => "sum over L(P') of h*_{P x [n], w x sigma} = x^k h*_{P'} h*_{P x [n]}",
            Claim::DissonantShift => "h*_{Q, w x sigma} = x^k h*_{Q, id x sigma}",
            Claim::DissonantDegree => "deg C^{Q,w} = m(n-1) + k",
            Claim::DissonantPalindromy => "x^{m(n-1)+2k} C^{Q,w}(1/x) = C^{Q,w}(x)",
            Claim::GammaInterpretation => "gamma_i of C_n^m counts extensions of the checked product with i + d rho-descents",
            Claim::WeakDescent => "sum over canon permutations of x^wdes = x^{m-1} C_n^m",
            Claim::MultisetPalindromy => "C^{Q,id} and C^{Q,u} are descent and weak-descent polynomials of multiset permutations, palindromic",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "thm-main" {
            return Ok(Claim::NaturalProduct);
        }
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Claim::ALL.iter().map(|c| c.name()).collect();
            format!("unknown claim {s:?}; expected one of: {}, thm-main, all", names.join(", "))
        })
    }
}

impl Serialize for Claim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A base poset supplied from outside, optionally with a labeling.
#[derive(Debug, Clone)]
pub struct Base {
    pub name: String,
    pub poset: Poset,
    pub labeling: Option<Labeling>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyParams {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub base: Option<Base>,
    pub removed: Option<Vec<InterCopyEdge>>,
    pub limits: Limits,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub claim: Claim,
    pub instance: String,
    pub holds: bool,
    pub report: Value,
}

fn outcome(claim: Claim, instance: impl Into<String>, holds: bool, report: impl Serialize) -> Result<Outcome> {
    Ok(Outcome { claim, instance: instance.into(), holds, report: serde_json::to_value(report)? })
}

fn need(value: Option<usize>, flag: &str, claim: Claim) -> Result<usize> {
    match value {
        Some(v) if v >= 1 => Ok(v),
        Some(_) => Err(Error::WrongShape(format!("{claim}: {flag} must be at least 1"))),
        None => Err(Error::WrongShape(format!("{claim} needs {flag}"))),
    }
}

fn fmt_labels(w: &Labeling) -> String {
    let sep = if w.len() > 9 { "," } else { "" };
    w.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// The base poset: the supplied one, or the chain `[m]`.
fn base_poset(claim: Claim, p: &VerifyParams) -> Result<(String, Poset)> {
    match &p.base {
        Some(b) => Ok((b.name.clone(), b.poset.clone())),
        None => {
            let m = need(p.m, "--m", claim)?;
            Ok((format!("chain-{m}"), Poset::chain(m)))
        }
    }
}

/// The supplied labeling if there is one, else every constant-descent
/// labeling of the base.
fn base_labelings(p: &VerifyParams, poset: &Poset) -> Result<Vec<(Labeling, Option<usize>)>> {
    match p.base.as_ref().and_then(|b| b.labeling.clone()) {
        Some(w) => {
            let k = poset.constant_chain_descents(&w)?;
            Ok(vec![(w, k)])
        }
        None => Ok(constant_descent_labelings(poset)?.into_iter().map(|(w, k)| (w, Some(k))).collect()),
    }
}

fn amphibian_specs(claim: Claim, p: &VerifyParams) -> Result<Vec<AmphibianSpec>> {
    let m = need(p.m, "--m", claim)?;
    let n = need(p.n, "--n", claim)?;
    match &p.removed {
        Some(edges) => Ok(vec![AmphibianSpec::new(m, n, edges.clone())?]),
        None => {
            p.limits.check_brute_force(m, n)?;
            let edges = AmphibianSpec::removable_count(m, n);
            if edges >= 64 {
                return Err(Error::CapExceeded { size: edges, cap: 63 });
            }
            Ok((0..1u64 << edges).map(|mask| AmphibianSpec::from_mask(m, n, mask)).collect())
        }
    }
}

fn catalan(n: usize) -> u128 {
    (0..n as u128).fold(1u128, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Runs one claim on the instances described by `params`.
pub fn verify(claim: Claim, params: &VerifyParams) -> Result<Vec<Outcome>> {
    let limits = &params.limits;
    match claim {
        Claim::CanonNarayana => {
            if params.m.is_some_and(|m| m != 2) {
                return Err(Error::WrongShape(format!("{claim} is stated for m = 2")));
            }
            let n = need(params.n, "--n", claim)?;
            let lhs = canon_polynomial_bruteforce(&Poset::chain(2), &Labeling::identity(2), n, limits)?;
            let identity = IdentityReport::compare("C_n^2 = A_n N_n", lhs, &eulerian(n) * &narayana(n));
            let palindromic = identity.lhs.is_palindromic(0, 2 * (n - 1));
            let holds = identity.holds && palindromic;
            let report = json!({ "identity": identity, "window": [0, 2 * (n - 1)], "palindromic": palindromic });
            Ok(vec![outcome(claim, format!("m=2 n={n}"), holds, report)?])
        }
        Claim::NaturalProduct => {
            let (name, poset) = base_poset(claim, params)?;
            let n = need(params.n, "--n", claim)?;
            let w = match params.base.as_ref().and_then(|b| b.labeling.clone()) {
                Some(w) if w.is_natural_for(&poset) => w,
                Some(_) => {
                    return Err(Error::WrongShape(format!(
                        "{claim} needs a natural labeling; use labeled-product for others"
                    )))
                }
                None => Labeling::natural(&poset),
            };
            let identity = product_identity(&poset, &w, n, limits)?;
            let window = canon_window(&poset, &w, n)?;
            let palindromic = window.map(|(lo, hi)| identity.lhs.is_palindromic(lo, hi));
            let holds = identity.holds && palindromic != Some(false);
            let report = json!({ "identity": identity, "graded": poset.is_graded(), "window": window, "palindromic": palindromic });
            Ok(vec![outcome(claim, format!("base={name} w={} n={n}", fmt_labels(&w)), holds, report)?])
        }
        Claim::NarayanaDyck => {
            let n = need(params.n, "--n", claim)?;
            let poset = product_with_chain(&Poset::chain(2), n);
            let labels = Labeling::identity(2 * n);
            let exts = enumerate_linear_extensions(&poset, limits)?;
            let paths = all_dyck_paths(n);
            let mut bijective = exts.len() == paths.len();
            let mut descents_are_high_peaks = true;
            for ext in &exts {
                let path = dyck_from_linext(ext)?;
                bijective &= &linext_from_dyck(&path) == ext;
                descents_are_high_peaks &= descent_set(&ext.word(&labels)) == path.high_peak_positions();
            }
            let identity = IdentityReport::compare("h*([2] x [n]) = N_n", hstar(&poset, &labels, limits)?, narayana(n));
            let count = exts.len() as u128;
            let holds = bijective && descents_are_high_peaks && identity.holds && count == catalan(n);
            let report = json!({
                "extensions": count.to_string(),
                "catalan": catalan(n).to_string(),
                "bijective": bijective,
                "descents_are_high_peaks": descents_are_high_peaks,
                "identity": identity,
            });
            Ok(vec![outcome(claim, format!("n={n}"), holds, report)?])
        }
        Claim::Shift => {
            // default instance: P = [m] x [n] under id x sigma, k = des(sigma)
            let (name, poset, labelings) = match &params.base {
                Some(b) => (b.name.clone(), b.poset.clone(), base_labelings(params, &b.poset)?),
                None => {
                    let m = need(params.m, "--m", claim)?;
                    let n = need(params.n, "--n", claim)?;
                    let poset = product_with_chain(&Poset::chain(m), n);
                    let id = Labeling::identity(m);
                    let ws = permutations(n).map(|s| (canon_labeling(&id, &s), Some(s.descents()))).collect();
                    (format!("chain-{m}x{n}"), poset, ws)
                }
            };
            let natural = Labeling::natural(&poset);
            let h = hstar(&poset, &natural, limits)?;
            let mut out = Vec::new();
            for (w, k) in labelings {
                let instance = format!("poset={name} w={}", fmt_labels(&w));
                let Some(k) = k else {
                    let report = json!({ "k": null, "note": "maximal chains carry different descent counts" });
                    out.push(outcome(claim, instance, false, report)?);
                    continue;
                };
                let identity = IdentityReport::compare("h*_{P,w} = x^k h*_P", hstar(&poset, &w, limits)?, h.shift(k));
                let vector = descent_shift_vector(&poset, &w, &natural)?;
                let vector_ok = vector.as_ref().is_some_and(|v| v.k == k as i64);
                let report = json!({ "k": k, "identity": identity, "shift_vector": vector });
                out.push(outcome(claim, instance, identity.holds && vector_ok, report)?);
            }
            Ok(out)
        }
        Claim::LabeledProduct | Claim::CheckedProduct => {
            let (name, poset) = base_poset(claim, params)?;
            let n = need(params.n, "--n", claim)?;
            let mut out = Vec::new();
            for (w, k) in base_labelings(params, &poset)? {
                let instance = format!("base={name} w={} n={n}", fmt_labels(&w));
                if k.is_none() {
                    let report = json!({ "k": null, "note": "maximal chains carry different descent counts" });
                    out.push(outcome(claim, instance, false, report)?);
                    continue;
                }
                if claim == Claim::CheckedProduct {
                    let identity = checked_product_identity(&poset, &w, n, limits)?;
                    out.push(outcome(claim, instance, identity.holds, json!({ "k": k, "identity": identity }))?);
                } else {
                    let identity = product_identity(&poset, &w, n, limits)?;
                    let window = canon_window(&poset, &w, n)?;
                    let palindromic = window.map(|(lo, hi)| identity.lhs.is_palindromic(lo, hi));
                    let holds = identity.holds && palindromic != Some(false);
                    let report = json!({ "k": k, "identity": identity, "window": window, "palindromic": palindromic });
                    out.push(outcome(claim, instance, holds, report)?);
                }
            }
            Ok(out)
        }
        Claim::GeneralizedProduct => {
            let (name, poset) = base_poset(claim, params)?;
            let n = need(params.n, "--n", claim)?;
            let w = match params.base.as_ref().and_then(|b| b.labeling.clone()) {
                Some(w) => w,
                None => Labeling::natural(&poset),
            };
            let mut indices = vec![("antichain", Poset::antichain(n)), ("chain", Poset::chain(n))];
            if n == 3 {
                indices.push(("v", canon::v_poset()));
                indices.push(("lambda", canon::lambda_poset()));
            }
            let mut out = Vec::new();
            for (index_name, index) in indices {
                let identity = generalized_product_identity(&poset, &w, &index, limits)?;
                let instance = format!("base={name} w={} index={index_name}-{n}", fmt_labels(&w));
                out.push(outcome(claim, instance, identity.holds, &identity)?);
            }
            Ok(out)
        }
        Claim::DissonantShift => {
            let m = need(params.m, "--m", claim)?;
            let mut out = Vec::new();
            for spec in amphibian_specs(claim, params)? {
                for w in permutations(m) {
                    let summands = dissonant_shift_check(&spec, &w, limits)?;
                    let holds = summands.iter().all(|r| r.holds);
                    let report = json!({ "spec": spec, "w": w, "k": w.descents(), "summands": summands });
                    out.push(outcome(claim, format!("{spec} w={}", fmt_labels(&w)), holds, report)?);
                }
            }
            Ok(out)
        }
        Claim::DissonantDegree | Claim::DissonantPalindromy => {
            let m = need(params.m, "--m", claim)?;
            let mut out = Vec::new();
            for spec in amphibian_specs(claim, params)? {
                for w in [Labeling::identity(m), Labeling::reverse(m)] {
                    let instance = format!("{spec} w={}", fmt_labels(&w));
                    if claim == Claim::DissonantDegree {
                        let r = dissonant_degree_check(&spec, &w, limits)?;
                        out.push(outcome(claim, instance, r.holds, &r)?);
                    } else {
                        let r = dissonant_palindromy_check(&spec, &w, limits)?;
                        out.push(outcome(claim, instance, r.holds, &r)?);
                    }
                    if m == 1 {
                        break;
                    }
                }
            }
            Ok(out)
        }
        Claim::GammaInterpretation => {
            let m = need(params.m, "--m", claim)?;
            let n = need(params.n, "--n", claim)?;
            let r = gamma_interpretation_counts(m, n, RhoRule::Lexicographic, limits)?;
            Ok(vec![outcome(claim, format!("m={m} n={n}"), r.matches_stated, &r)?])
        }
        Claim::WeakDescent => {
            let m = need(params.m, "--m", claim)?;
            let n = need(params.n, "--n", claim)?;
            let by_words = weak_descent_by_words(m, n, limits)?;
            let by_labeling = weak_descent_polynomial(m, n, limits);
            let agree = by_labeling.is_ok();
            let canon = canon_polynomial_bruteforce(&Poset::chain(m), &Labeling::identity(m), n, limits)?;
            let identity = IdentityReport::compare("wdes polynomial = x^{m-1} C_n^m", by_words, canon.shift(m - 1));
            let product = product_with_chain(&Poset::chain(m), n);
            let closed = (&eulerian(n) * &hstar(&product, &Labeling::identity(m * n), limits)?).shift(m - 1);
            let closed_form = IdentityReport::compare("x^{m-1} C_n^m = x^{m-1} A_n h*", identity.rhs.clone(), closed);
            let holds = agree && identity.holds && closed_form.holds;
            let report = json!({
                "reverse_labeling_agrees": agree,
                "mismatch": by_labeling.err().map(|e| e.to_string()),
                "identity": identity,
                "closed_form": closed_form,
            });
            Ok(vec![outcome(claim, format!("m={m} n={n}"), holds, report)?])
        }
        Claim::MultisetPalindromy => {
            let mut out = Vec::new();
            for spec in amphibian_specs(claim, params)? {
                let r = multiset_interpretation_check(&spec, limits)?;
                out.push(outcome(claim, spec.to_string(), r.holds, &r)?);
            }
            Ok(out)
        }
    }
}

/// Every claim on every instance with `m * n <= max_size`, `m <= 4` and
/// `n <= 6`; the product claims also run on the three-element V and Λ
/// bases when `3n <= max_size`.
pub fn verify_all(max_size: usize, limits: &Limits) -> Result<Vec<Outcome>> {
    let pairs: Vec<(usize, usize)> = (1..=4usize)
        .flat_map(|m| (1..=6usize).map(move |n| (m, n)))
        .filter(|&(m, n)| m * n <= max_size)
        .collect();
    let mut out = Vec::new();
    for claim in Claim::ALL {
        for &(m, n) in &pairs {
            if claim == Claim::CanonNarayana && m != 2 {
                continue;
            }
            if claim == Claim::NarayanaDyck && m != 2 {
                continue;
            }
            let params = VerifyParams { m: Some(m), n: Some(n), limits: *limits, ..Default::default() };
            out.extend(verify(claim, &params)?);
        }
        if matches!(
            claim,
            Claim::NaturalProduct | Claim::LabeledProduct | Claim::CheckedProduct | Claim::GeneralizedProduct
        ) {
            for (name, poset) in [("v", canon::v_poset()), ("lambda", canon::lambda_poset())] {
                for n in (1..=6).filter(|n| 3 * n <= max_size) {
                    let base = Base { name: name.into(), poset: poset.clone(), labeling: None };
                    let params = VerifyParams { n: Some(n), base: Some(base), limits: *limits, ..Default::default() };
                    out.extend(verify(claim, &params)?);
                }
            }
        }
    }
    Ok(out)
}
