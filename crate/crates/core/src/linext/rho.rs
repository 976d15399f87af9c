//! Descents relative to the rank parity of a graded poset.

use serde::Serialize;

use super::LinearExtension;
use crate::error::{Error, Result};
use crate::poset::{Labeling, Poset};

/// How a step `j -> j+1` of the word is compared once each entry carries the
/// parity `rho` of its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
pub enum RhoRule {
    /// `(rho, label)` drops lexicographically: `rho` drops, or `rho` is
    /// unchanged and the label drops. This is the rule under which the
    /// γ-class counts come out right.
    #[default]
    Lexicographic,
    /// The label drops or `rho` drops.
    LabelOrParity,
}

impl RhoRule {
    fn is_descent(self, a: (u8, usize), b: (u8, usize)) -> bool {
        match self {
            RhoRule::Lexicographic => a > b,
            RhoRule::LabelOrParity => b.1 < a.1 || b.0 < a.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoDescentData {
    pub word: Vec<usize>,
    /// `rho` of each entry of the word.
    pub parities: Vec<u8>,
    /// 1-based ρ-descent positions.
    pub descents: Vec<usize>,
    /// ρ-descents `j` with `j - 1` also a ρ-descent, or `j = 1`.
    pub doubles: Vec<usize>,
}

impl RhoDescentData {
    /// If the last two entries both have odd rank, they must ascend.
    pub fn final_pair_ascends_if_odd(&self) -> bool {
        let len = self.word.len();
        if len < 2 {
            return true;
        }
        let (a, b) = (len - 2, len - 1);
        !(self.parities[a] == 1 && self.parities[b] == 1) || self.word[a] < self.word[b]
    }
}

/// ρ-descent data of an extension of a graded labeled poset (in practice the
/// checked product `[m] (x) [n]` with its checked labeling).
pub fn rho_descent_data(
    poset: &Poset,
    w: &Labeling,
    pi: &LinearExtension,
    rule: RhoRule,
) -> Result<RhoDescentData> {
    w.check_size(poset.len())?;
    if !super::is_linear_extension(poset, pi.order()) {
        return Err(Error::NotLinearExtension(pi.order().to_vec()));
    }
    let ranks = poset.rank_function()?;
    let word = pi.word(w);
    let parities: Vec<u8> = pi.order().iter().map(|&e| (ranks[e] % 2) as u8).collect();
    let descents: Vec<usize> = (1..word.len())
        .filter(|&j| rule.is_descent((parities[j - 1], word[j - 1]), (parities[j], word[j])))
        .collect();
    let doubles = descents
        .iter()
        .copied()
        .filter(|&j| j == 1 || descents.binary_search(&(j - 1)).is_ok())
        .collect();
    Ok(RhoDescentData { word, parities, descents, doubles })
}
