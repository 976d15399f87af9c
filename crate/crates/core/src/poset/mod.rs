//! Finite posets given by their cover relations, and labelings of them.

mod chains;
mod json;
mod product;

pub use chains::{descent_shift_vector, ChainDescentProfile, ShiftVector};
pub use json::PosetFile;
pub use product::{
    canon_labeling, checked_labeling, checked_product, product_with_chain,
    remove_intercopy_covers, InterCopyEdge,
};

use crate::error::{Error, Result};

/// A finite poset on elements `0..len`, stored as its Hasse diagram.
///
/// Construction rejects cyclic, duplicated and transitively implied covers,
/// so two posets compare equal exactly when their cover sets do.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    len: usize,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Poset {
    /// Builds a poset from an irredundant, acyclic cover list.
    pub fn new(len: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut covers: Vec<(usize, usize)> = covers.into_iter().collect();
        for &(a, b) in &covers {
            for e in [a, b] {
                if e >= len {
                    return Err(Error::ElementOutOfRange { element: e, len });
                }
            }
        }
        covers.sort_unstable();
        if let Some(w) = covers.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCover(w[0].0, w[0].1));
        }
        let poset = Self::from_sorted_unchecked(len, covers);
        poset.check_acyclic()?;
        if let Some((a, b)) = poset.redundant_covers().into_iter().next() {
            return Err(Error::RedundantCover(a, b));
        }
        Ok(poset)
    }

    /// Builds a poset from any acyclic relation by taking its transitive
    /// reduction. Duplicates and implied pairs are dropped.
    pub fn from_relations(
        len: usize,
        relations: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut relations: Vec<(usize, usize)> = relations.into_iter().collect();
        for &(a, b) in &relations {
            for e in [a, b] {
                if e >= len {
                    return Err(Error::ElementOutOfRange { element: e, len });
                }
            }
        }
        relations.sort_unstable();
        relations.dedup();
        let graph = Self::from_sorted_unchecked(len, relations);
        graph.check_acyclic()?;
        let redundant = graph.redundant_covers();
        let covers = graph.covers.into_iter().filter(|c| !redundant.contains(c));
        Ok(Self::from_sorted_unchecked(len, covers.collect()))
    }

    fn from_sorted_unchecked(len: usize, covers: Vec<(usize, usize)>) -> Self {
        let mut up = vec![Vec::new(); len];
        let mut down = vec![Vec::new(); len];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        for v in down.iter_mut() {
            v.sort_unstable();
        }
        Poset { len, covers, up, down }
    }

    /// The chain `0 < 1 < ... < m-1`.
    pub fn chain(m: usize) -> Self {
        Self::from_sorted_unchecked(m, (1..m).map(|i| (i - 1, i)).collect())
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Cover pairs `(a, b)` meaning `a` is covered by `b`, in lexicographic order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn has_cover(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    pub fn upper_covers(&self, e: usize) -> &[usize] {
        &self.up[e]
    }

    pub fn lower_covers(&self, e: usize) -> &[usize] {
        &self.down[e]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len).filter(|&e| self.down[e].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len).filter(|&e| self.up[e].is_empty()).collect()
    }

    /// The lexicographically smallest linear extension.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut pending: Vec<usize> = self.down.iter().map(Vec::len).collect();
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..self.len).filter(|&e| pending[e] == 0).map(std::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(self.len);
        while let Some(std::cmp::Reverse(e)) = ready.pop() {
            order.push(e);
            for &u in &self.up[e] {
                pending[u] -= 1;
                if pending[u] == 0 {
                    ready.push(std::cmp::Reverse(u));
                }
            }
        }
        order
    }

    fn check_acyclic(&self) -> Result<()> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.len];
        let mut parent = vec![usize::MAX; self.len];
        for root in 0..self.len {
            if state[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = 1;
            while let Some(&mut (e, ref mut next)) = stack.last_mut() {
                if let Some(&u) = self.up[e].get(*next) {
                    *next += 1;
                    match state[u] {
                        0 => {
                            state[u] = 1;
                            parent[u] = e;
                            stack.push((u, 0));
                        }
                        1 => {
                            let mut cycle = vec![e];
                            let mut cur = e;
                            while cur != u {
                                cur = parent[cur];
                                cycle.push(cur);
                            }
                            cycle.reverse();
                            return Err(Error::Cycle(cycle));
                        }
                        _ => {}
                    }
                } else {
                    state[e] = 2;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// Strict-upset bitsets: bit `b` of row `a` is set iff `a < b`.
    pub(crate) fn strict_upsets(&self) -> Vec<BitSet> {
        let mut reach = vec![BitSet::new(self.len); self.len];
        for &e in self.topological_order().iter().rev() {
            let mut row = BitSet::new(self.len);
            for &u in &self.up[e] {
                row.insert(u);
                row.union_with(&reach[u]);
            }
            reach[e] = row;
        }
        reach
    }

    fn redundant_covers(&self) -> Vec<(usize, usize)> {
        let reach = self.strict_upsets();
        self.covers
            .iter()
            .copied()
            .filter(|&(a, b)| self.up[a].iter().any(|&c| c != b && reach[c].contains(b)))
            .collect()
    }

    /// `a < b` in the order.
    pub fn less_than(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.len];
        let mut stack = vec![a];
        while let Some(e) = stack.pop() {
            for &u in &self.up[e] {
                if u == b {
                    return true;
                }
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        false
    }

    /// All comparable pairs `(a, b)` with `a < b`.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        let reach = self.strict_upsets();
        (0..self.len)
            .flat_map(|a| reach[a].iter().map(move |b| (a, b)).collect::<Vec<_>>())
            .collect()
    }

    /// Shortest and longest chain length (in covers) from a minimal element
    /// up to each element.
    fn depth_range(&self) -> Vec<(usize, usize)> {
        let mut range = vec![(0usize, 0usize); self.len];
        for e in self.topological_order() {
            if let Some((lo, hi)) = self.down[e]
                .iter()
                .map(|&d| range[d])
                .fold(None, |acc: Option<(usize, usize)>, (lo, hi)| match acc {
                    None => Some((lo, hi)),
                    Some((a, b)) => Some((a.min(lo), b.max(hi))),
                })
            {
                range[e] = (lo + 1, hi + 1);
            }
        }
        range
    }

    /// True iff every maximal chain has the same length.
    pub fn is_graded(&self) -> bool {
        self.rank_function().is_ok()
    }

    /// Length of the maximal chains of each principal ideal; errors unless the
    /// poset is graded.
    pub fn rank_function(&self) -> Result<Vec<usize>> {
        let range = self.depth_range();
        let mut top = None;
        for e in self.maximal_elements() {
            let (lo, hi) = range[e];
            if lo != hi || top.is_some_and(|t| t != lo) {
                return Err(Error::NotGraded);
            }
            top = Some(lo);
        }
        Ok(range.into_iter().map(|(lo, _)| lo).collect())
    }

    /// Length of the maximal chains; `None` if the poset is not graded or empty.
    pub fn rank(&self) -> Option<usize> {
        let ranks = self.rank_function().ok()?;
        self.maximal_elements().first().map(|&e| ranks[e])
    }

    /// Every maximal chain, listed bottom to top.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains = Vec::new();
        let mut path = Vec::new();
        for start in self.minimal_elements() {
            self.extend_chains(start, &mut path, &mut chains);
        }
        chains
    }

    fn extend_chains(&self, e: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        path.push(e);
        if self.up[e].is_empty() {
            out.push(path.clone());
        } else {
            for &u in &self.up[e] {
                self.extend_chains(u, path, out);
            }
        }
        path.pop();
    }

    /// Parity of the chain length of the principal ideal below `q`.
    pub fn rho(&self, q: usize) -> Result<u8> {
        if q >= self.len {
            return Err(Error::ElementOutOfRange { element: q, len: self.len });
        }
        Ok((self.rank_function()?[q] % 2) as u8)
    }
}

/// A bijection from poset elements onto `1..=len`; `values[e]` is the label of `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Labeling {
    values: Vec<usize>,
}

impl Labeling {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidLabeling(values));
            }
            seen[v - 1] = true;
        }
        Ok(Labeling { values })
    }

    /// Label `e + 1` on element `e`. Natural for any poset whose index order
    /// is a linear extension (chains and the product layouts).
    pub fn identity(n: usize) -> Self {
        Labeling { values: (1..=n).collect() }
    }

    /// `i -> n + 1 - i`; the reverse natural labeling of a chain.
    pub fn reverse(n: usize) -> Self {
        Labeling { values: (1..=n).rev().collect() }
    }

    /// A natural labeling: labels follow the lexicographically smallest
    /// linear extension.
    pub fn natural(poset: &Poset) -> Self {
        let mut values = vec![0; poset.len()];
        for (i, e) in poset.topological_order().into_iter().enumerate() {
            values[e] = i + 1;
        }
        Labeling { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn label(&self, e: usize) -> usize {
        self.values[e]
    }

    /// Element carrying label `v`.
    pub fn element_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x == v).expect("label in range")
    }

    /// `v -> len + 1 - v` applied to every label.
    pub fn complement(&self) -> Self {
        let n = self.values.len();
        Labeling { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn is_natural_for(&self, poset: &Poset) -> bool {
        self.values.len() == poset.len()
            && poset.covers().iter().all(|&(a, b)| self.values[a] < self.values[b])
    }

    /// Number of descents, read as a permutation in one-line notation.
    pub fn descents(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub(crate) fn check_size(&self, expected: usize) -> Result<()> {
        if self.values.len() != expected {
            return Err(Error::SizeMismatch { expected, found: self.values.len() });
        }
        Ok(())
    }
}

/// Fixed-size bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |i| bits >> i & 1 == 1).map(move |i| w * 64 + i)
        })
    }
}
