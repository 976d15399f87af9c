//! Linear extensions of finite posets and the statistics read off them.
//!
//! Enumeration is plain backtracking over the currently minimal elements,
//! always trying smaller indices first, so extensions come out in
//! lexicographic order on element indices. A run can start from any valid
//! prefix, which is how work is split across threads.

mod dyck;
mod phi;
mod rho;
mod word;

pub use dyck::{all_dyck_paths, dyck_from_linext, linext_from_dyck, DyckPath, Step};
pub use phi::{phi, phi_on_extension, PhiImage};
pub use rho::{rho_descent_data, RhoDescentData, RhoRule};
pub use word::{
    canon_word_to_checked_extension, descent_count, descent_set, is_canon_permutation,
    multiset_word, weak_descent_count, weak_descent_set, word, MultisetWord,
};

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poset::{Labeling, Poset};

/// An order-preserving arrangement of all elements of a poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinearExtension {
    order: Vec<usize>,
}

impl LinearExtension {
    /// Checks that `order` lists every element once and respects every cover.
    pub fn new(poset: &Poset, order: Vec<usize>) -> Result<Self> {
        if !is_linear_extension(poset, &order) {
            return Err(Error::NotLinearExtension(order));
        }
        Ok(LinearExtension { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Labels read along the extension.
    pub fn word(&self, w: &Labeling) -> Vec<usize> {
        word(&self.order, w)
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }
}

pub fn is_linear_extension(poset: &Poset, order: &[usize]) -> bool {
    if order.len() != poset.len() {
        return false;
    }
    let mut position = vec![usize::MAX; poset.len()];
    for (i, &e) in order.iter().enumerate() {
        if e >= poset.len() || position[e] != usize::MAX {
            return false;
        }
        position[e] = i;
    }
    poset.covers().iter().all(|&(a, b)| position[a] < position[b])
}

/// Backtracking state: which elements are placed and how many lower covers
/// each unplaced element is still waiting on.
struct State<'a> {
    poset: &'a Poset,
    pending: Vec<usize>,
    placed: Vec<bool>,
    order: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(poset: &'a Poset, prefix: &[usize]) -> Result<Self> {
        let mut state = State {
            poset,
            pending: (0..poset.len()).map(|e| poset.lower_covers(e).len()).collect(),
            placed: vec![false; poset.len()],
            order: Vec::with_capacity(poset.len()),
        };
        for &e in prefix {
            if e >= poset.len() || !state.available(e) {
                return Err(Error::NotLinearExtension(prefix.to_vec()));
            }
            state.push(e);
        }
        Ok(state)
    }

    #[inline]
    fn available(&self, e: usize) -> bool {
        !self.placed[e] && self.pending[e] == 0
    }

    #[inline]
    fn push(&mut self, e: usize) {
        self.placed[e] = true;
        for &u in self.poset.upper_covers(e) {
            self.pending[u] -= 1;
        }
        self.order.push(e);
    }

    #[inline]
    fn pop(&mut self) -> usize {
        let e = self.order.pop().expect("non-empty order");
        self.placed[e] = false;
        for &u in self.poset.upper_covers(e) {
            self.pending[u] += 1;
        }
        e
    }

    fn visit<F>(&mut self, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.poset.len();
        if self.order.len() == n {
            return f(&self.order);
        }
        for e in 0..n {
            if self.available(e) {
                self.push(e);
                let flow = self.visit(f);
                self.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    fn count(&mut self) -> u128 {
        let n = self.poset.len();
        if self.order.len() == n {
            return 1;
        }
        let mut total = 0;
        for e in 0..n {
            if self.available(e) {
                self.push(e);
                total += self.count();
                self.pop();
            }
        }
        total
    }

    fn descents(&mut self, labels: &[usize], last: usize, des: usize, hist: &mut [u128]) {
        let n = self.poset.len();
        if self.order.len() == n {
            hist[des] += 1;
            return;
        }
        for e in 0..n {
            if self.available(e) {
                let v = labels[e];
                self.push(e);
                self.descents(labels, v, des + usize::from(last > v), hist);
                self.pop();
            }
        }
    }
}

/// Streaming iterator over linear extensions, optionally below a fixed prefix.
pub struct LinearExtensions<'a> {
    state: State<'a>,
    base: usize,
    cursor: Vec<usize>,
    emitted: bool,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    pub fn new(poset: &'a Poset, limits: &Limits) -> Result<Self> {
        Self::with_prefix(poset, &[], limits)
    }

    /// Extensions beginning with `prefix`, which must itself be a valid start.
    pub fn with_prefix(poset: &'a Poset, prefix: &[usize], limits: &Limits) -> Result<Self> {
        limits.check_poset(poset)?;
        let state = State::new(poset, prefix)?;
        Ok(LinearExtensions {
            state,
            base: prefix.len(),
            cursor: vec![0; poset.len() + 1],
            emitted: false,
            done: false,
        })
    }

    fn advance(&mut self) -> bool {
        let n = self.state.poset.len();
        loop {
            let depth = self.state.order.len();
            if depth == n {
                return true;
            }
            let next = (self.cursor[depth]..n).find(|&e| self.state.available(e));
            match next {
                Some(e) => {
                    self.cursor[depth] = e + 1;
                    self.state.push(e);
                    self.cursor[depth + 1] = 0;
                }
                None => {
                    if depth == self.base {
                        return false;
                    }
                    self.state.pop();
                }
            }
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if self.emitted {
            if self.state.order.len() == self.base {
                self.done = true;
                return None;
            }
            self.state.pop();
        }
        if self.advance() {
            self.emitted = true;
            Some(LinearExtension { order: self.state.order.clone() })
        } else {
            self.done = true;
            None
        }
    }
}

/// All linear extensions, materialized.
pub fn enumerate_linear_extensions(poset: &Poset, limits: &Limits) -> Result<Vec<LinearExtension>> {
    Ok(LinearExtensions::new(poset, limits)?.collect())
}

/// Calls `f` on each extension (as a borrowed element order) until it breaks.
pub fn for_each_extension<F>(poset: &Poset, limits: &Limits, mut f: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    limits.check_poset(poset)?;
    Ok(State::new(poset, &[])?.visit(&mut f))
}

/// Number of linear extensions, without materializing any of them.
pub fn count_linear_extensions(poset: &Poset, limits: &Limits) -> Result<u128> {
    limits.check_poset(poset)?;
    Ok(State::new(poset, &[])?.count())
}

/// Histogram of descent counts of the words of all extensions under `w`,
/// below an optional prefix. Entry `d` counts extensions with `d` descents.
pub fn descent_histogram_from(
    poset: &Poset,
    w: &Labeling,
    prefix: &[usize],
    limits: &Limits,
) -> Result<Vec<u128>> {
    limits.check_poset(poset)?;
    w.check_size(poset.len())?;
    let mut state = State::new(poset, prefix)?;
    let labels = w.values();
    let des = prefix.windows(2).filter(|p| labels[p[0]] > labels[p[1]]).count();
    let last = prefix.last().map_or(0, |&e| labels[e]);
    let mut hist = vec![0u128; poset.len().max(1)];
    state.descents(labels, last, des, &mut hist);
    Ok(hist)
}

pub fn descent_histogram(poset: &Poset, w: &Labeling, limits: &Limits) -> Result<Vec<u128>> {
    descent_histogram_from(poset, w, &[], limits)
}

/// Every valid prefix of length `depth` (fewer if the poset is smaller), in
/// lexicographic order. The extensions below distinct prefixes partition
/// the full set.
pub fn prefixes(poset: &Poset, depth: usize, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    limits.check_poset(poset)?;
    let depth = depth.min(poset.len());
    let mut out = Vec::new();
    let mut state = State::new(poset, &[])?;
    collect_prefixes(&mut state, depth, &mut out);
    Ok(out)
}

fn collect_prefixes(state: &mut State<'_>, depth: usize, out: &mut Vec<Vec<usize>>) {
    if state.order.len() == depth {
        out.push(state.order.clone());
        return;
    }
    for e in 0..state.poset.len() {
        if state.available(e) {
            state.push(e);
            collect_prefixes(state, depth, out);
            state.pop();
        }
    }
}

/// [`descent_histogram`] split by prefixes of length `split_depth` and
/// summed in parallel. Histogram addition is commutative, so the result does
/// not depend on scheduling.
pub fn par_descent_histogram(
    poset: &Poset,
    w: &Labeling,
    split_depth: usize,
    limits: &Limits,
) -> Result<Vec<u128>> {
    let starts = prefixes(poset, split_depth, limits)?;
    starts
        .par_iter()
        .map(|p| descent_histogram_from(poset, w, p, limits))
        .try_reduce(
            || vec![0u128; poset.len().max(1)],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                Ok(a)
            },
        )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{checked_product, product_with_chain};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn chain_has_one_extension() {
        for m in 1..6 {
            let exts = enumerate_linear_extensions(&Poset::chain(m), &lim()).unwrap();
            assert_eq!(exts.len(), 1);
            assert_eq!(exts[0].order(), (0..m).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn antichain_gives_all_orders_lexicographically() {
        let exts: Vec<Vec<usize>> = enumerate_linear_extensions(&Poset::antichain(3), &lim())
            .unwrap()
            .into_iter()
            .map(LinearExtension::into_order)
            .collect();
        assert_eq!(
            exts,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }

    #[test]
    fn two_by_four_has_fourteen() {
        let p = product_with_chain(&Poset::chain(2), 4);
        assert_eq!(count_linear_extensions(&p, &lim()).unwrap(), 14);
        assert_eq!(enumerate_linear_extensions(&p, &lim()).unwrap().len(), 14);
        let p = product_with_chain(&Poset::chain(2), 2);
        assert_eq!(count_linear_extensions(&p, &lim()).unwrap(), 2);
    }

    #[test]
    fn empty_poset_has_the_empty_extension() {
        let p = Poset::antichain(0);
        assert_eq!(enumerate_linear_extensions(&p, &lim()).unwrap().len(), 1);
        assert_eq!(count_linear_extensions(&p, &lim()).unwrap(), 1);
    }

    #[test]
    fn iterator_stops_early_and_resumes_from_prefix() {
        let p = product_with_chain(&Poset::chain(2), 3);
        let first_two: Vec<_> = LinearExtensions::new(&p, &lim()).unwrap().take(2).collect();
        assert_eq!(first_two.len(), 2);
        let below: Vec<_> = LinearExtensions::with_prefix(&p, &[0, 2], &lim()).unwrap().collect();
        assert!(below.iter().all(|e| e.order().starts_with(&[0, 2])));
        assert_eq!(below.len(), 3);
        assert!(LinearExtensions::with_prefix(&p, &[1], &lim()).is_err());
    }

    #[test]
    fn visitor_can_break() {
        let p = Poset::antichain(4);
        let mut seen = 0;
        let flow = for_each_extension(&p, &lim(), |_| {
            seen += 1;
            if seen == 5 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(flow, ControlFlow::Break(()));
        assert_eq!(seen, 5);
    }

    #[test]
    fn cap_is_enforced() {
        let p = Poset::antichain(70);
        assert!(matches!(
            count_linear_extensions(&p, &lim()),
            Err(Error::CapExceeded { size: 70, cap: 64 })
        ));
    }

    #[test]
    fn prefix_partition_sums_to_total() {
        let p = checked_product(&Poset::chain(2), 3);
        let w = Labeling::identity(p.len());
        let whole = descent_histogram(&p, &w, &lim()).unwrap();
        for depth in 0..5 {
            let split: u128 = prefixes(&p, depth, &lim())
                .unwrap()
                .iter()
                .map(|pre| {
                    LinearExtensions::with_prefix(&p, pre, &lim()).unwrap().count() as u128
                })
                .sum();
            assert_eq!(split, whole.iter().sum::<u128>());
            assert_eq!(par_descent_histogram(&p, &w, depth, &lim()).unwrap(), whole);
        }
    }

    #[test]
    fn every_emission_respects_covers() {
        for (a, b) in [(1, 4), (2, 3), (3, 2), (2, 4)] {
            let p = product_with_chain(&Poset::chain(a), b);
            for ext in LinearExtensions::new(&p, &lim()).unwrap() {
                assert!(is_linear_extension(&p, ext.order()));
            }
        }
    }
}
