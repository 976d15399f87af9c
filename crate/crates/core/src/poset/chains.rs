//! Descents along maximal chains of a labeled poset.

use serde::Serialize;

use super::{Labeling, Poset};
use crate::error::Result;

/// Descent counts of every maximal chain of a labeled poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainDescentProfile {
    pub per_chain: Vec<(Vec<usize>, usize)>,
    /// The common descent count, when all maximal chains agree.
    pub constant_k: Option<usize>,
}

impl Poset {
    /// A cover `a < b` is a descent of the labeling when `w(a) > w(b)`.
    pub fn is_descent_cover(&self, w: &Labeling, a: usize, b: usize) -> bool {
        w.label(a) > w.label(b)
    }

    pub fn chain_descent_profile(&self, w: &Labeling) -> Result<ChainDescentProfile> {
        w.check_size(self.len())?;
        let per_chain: Vec<(Vec<usize>, usize)> = self
            .maximal_chains()
            .into_iter()
            .map(|c| {
                let des = c.windows(2).filter(|p| w.label(p[0]) > w.label(p[1])).count();
                (c, des)
            })
            .collect();
        let constant_k = match per_chain.split_first() {
            None => Some(0),
            Some(((_, k), rest)) => rest.iter().all(|(_, d)| d == k).then_some(*k),
        };
        Ok(ChainDescentProfile { per_chain, constant_k })
    }

    /// The common number of descents on all maximal chains, found by a
    /// min/max sweep over the Hasse diagram without listing chains.
    pub fn constant_chain_descents(&self, w: &Labeling) -> Result<Option<usize>> {
        w.check_size(self.len())?;
        let mut range = vec![(0usize, 0usize); self.len()];
        for e in self.topological_order() {
            let mut acc: Option<(usize, usize)> = None;
            for &d in self.lower_covers(e) {
                let step = usize::from(w.label(d) > w.label(e));
                let (lo, hi) = (range[d].0 + step, range[d].1 + step);
                acc = Some(match acc {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                });
            }
            range[e] = acc.unwrap_or((0, 0));
        }
        let mut common = None;
        for e in self.maximal_elements() {
            let (lo, hi) = range[e];
            if lo != hi || common.is_some_and(|c| c != lo) {
                return Ok(None);
            }
            common = Some(lo);
        }
        Ok(Some(common.unwrap_or(0)))
    }
}

/// Integer offsets `t` witnessing `h*_{P,w} = x^k h*_{P,w2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShiftVector {
    pub t: Vec<i64>,
    pub k: i64,
}

/// Propagates `t` up from the minimal elements (where it is 0), adding +1 on
/// covers that are descents only under `w`, -1 on covers that are descents
/// only under `w2`. Returns `None` if two covers force different values on
/// one element or the maximal elements end up with different values.
pub fn descent_shift_vector(
    poset: &Poset,
    w: &Labeling,
    w2: &Labeling,
) -> Result<Option<ShiftVector>> {
    w.check_size(poset.len())?;
    w2.check_size(poset.len())?;
    let delta = |a: usize, b: usize| -> i64 {
        i64::from(poset.is_descent_cover(w, a, b)) - i64::from(poset.is_descent_cover(w2, a, b))
    };
    let mut t: Vec<Option<i64>> = vec![None; poset.len()];
    for e in poset.topological_order() {
        if poset.lower_covers(e).is_empty() {
            t[e] = Some(0);
            continue;
        }
        for &d in poset.lower_covers(e) {
            let value = t[d].expect("lower covers come first") + delta(d, e);
            match t[e] {
                None => t[e] = Some(value),
                Some(existing) if existing != value => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let t: Vec<i64> = t.into_iter().map(|v| v.expect("every element visited")).collect();
    // Sweep every cover once more; the propagation above already implies this.
    if poset.covers().iter().any(|&(a, b)| t[b] - t[a] != delta(a, b)) {
        return Ok(None);
    }
    let maxima = poset.maximal_elements();
    let k = maxima.first().map_or(0, |&e| t[e]);
    if maxima.iter().any(|&e| t[e] != k) {
        return Ok(None);
    }
    Ok(Some(ShiftVector { t, k }))
}
