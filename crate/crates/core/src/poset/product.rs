//! Products with a chain, checked products, and their canon labelings.
//!
//! Layout contract: in `P x [n]` the element `(p, j)` (with `p` a 0-based
//! element of `P` and `j` in `1..=n`) has index `p + (j - 1) * |P|`. The
//! checked product appends its `n` top elements at indices `|P| n ..`.

use super::{Labeling, Poset};
use crate::error::{Error, Result};

/// `P x [n]`: `n` copies of `P` stacked along a chain.
pub fn product_with_chain(base: &Poset, n: usize) -> Poset {
    let m = base.len();
    let mut covers = Vec::with_capacity(base.covers().len() * n + m * n.saturating_sub(1));
    for j in 0..n {
        for &(a, b) in base.covers() {
            covers.push((a + j * m, b + j * m));
        }
        if j + 1 < n {
            for p in 0..m {
                covers.push((p + j * m, p + (j + 1) * m));
            }
        }
    }
    covers.sort_unstable();
    Poset::from_sorted_unchecked(m * n, covers)
}

/// `P x [n]` with an `n`-element antichain placed above all of its maximal
/// elements.
pub fn checked_product(base: &Poset, n: usize) -> Poset {
    let m = base.len();
    let product = product_with_chain(base, n);
    let mut covers = product.covers().to_vec();
    for top in product.maximal_elements() {
        for t in 0..n {
            covers.push((top, m * n + t));
        }
    }
    covers.sort_unstable();
    Poset::from_sorted_unchecked((m + 1) * n, covers)
}

/// The canon labeling `(w x sigma)(p, j) = w(p) + (sigma(j) - 1) |P|`.
pub fn canon_labeling(w: &Labeling, sigma: &Labeling) -> Labeling {
    let m = w.len();
    let mut values = Vec::with_capacity(m * sigma.len());
    for &s in sigma.values() {
        values.extend(w.values().iter().map(|&v| v + (s - 1) * m));
    }
    Labeling { values }
}

/// Labeling of the checked product: `w x id` below, and `mn+1, ..., (m+1)n`
/// on the top antichain in index order.
pub fn checked_labeling(w: &Labeling, n: usize) -> Labeling {
    let m = w.len();
    let mut values = canon_labeling(w, &Labeling::identity(n)).values;
    values.extend(m * n + 1..=(m + 1) * n);
    Labeling { values }
}

/// The inter-copy cover `(p, j) < (p, j + 1)`, with `p` in `1..=m` and `j` in
/// `1..n` (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InterCopyEdge {
    pub p: usize,
    pub j: usize,
}

impl InterCopyEdge {
    pub fn new(p: usize, j: usize) -> Self {
        InterCopyEdge { p, j }
    }

    /// Element indices `(lower, upper)` in the product layout for base size `m`.
    pub fn elements(&self, m: usize) -> (usize, usize) {
        let lower = (self.p - 1) + (self.j - 1) * m;
        (lower, lower + m)
    }

    /// All `m (n - 1)` inter-copy edges in row-major order (`p` outer, `j` inner).
    pub fn all(m: usize, n: usize) -> Vec<InterCopyEdge> {
        (1..=m)
            .flat_map(|p| (1..n).map(move |j| InterCopyEdge { p, j }))
            .collect()
    }
}

impl std::fmt::Display for InterCopyEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.p, self.j)
    }
}

impl serde::Serialize for InterCopyEdge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for InterCopyEdge {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (p, j) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| format!("expected p:j, got {s:?}"))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
        Ok(InterCopyEdge { p: parse(p)?, j: parse(j)? })
    }
}

/// Deletes the named inter-copy covers from `P x [n]` (base size `m`).
///
/// The deleted relations are not re-added transitively; since the `P`
/// coordinate never decreases along a chain, they really are absent.
pub fn remove_intercopy_covers(
    product: &Poset,
    m: usize,
    removed: &[InterCopyEdge],
) -> Result<Poset> {
    let mut drop = Vec::with_capacity(removed.len());
    for edge in removed {
        if m == 0 || edge.p == 0 || edge.p > m || edge.j == 0 {
            return Err(Error::UnknownEdge { p: edge.p, j: edge.j });
        }
        let (a, b) = edge.elements(m);
        if b >= product.len() || !product.has_cover(a, b) {
            return Err(Error::UnknownEdge { p: edge.p, j: edge.j });
        }
        drop.push((a, b));
    }
    let covers = product.covers().iter().copied().filter(|c| !drop.contains(c)).collect();
    Ok(Poset::from_sorted_unchecked(product.len(), covers))
}
