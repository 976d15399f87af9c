//! Dyck paths and their bijection with linear extensions of `[2] x [n]`.

use serde::Serialize;

use super::LinearExtension;
use crate::error::{Error, Result};
use crate::poset::{product_with_chain, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    East,
    North,
}

/// A lattice path from `(0,0)` to `(n,n)` with unit east/north steps that
/// never goes above `y = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::East => 1,
                Step::North => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!("goes above the diagonal at step {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath("does not end on the diagonal".into()));
        }
        Ok(DyckPath { steps })
    }

    /// Parses a word over `{e, n}`.
    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .map(|c| match c {
                'e' | 'E' => Ok(Step::East),
                'n' | 'N' => Ok(Step::North),
                other => Err(Error::InvalidDyckPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// 1-based positions `i` where steps `i, i+1` form a peak `en`.
    pub fn peak_positions(&self) -> Vec<usize> {
        (1..self.steps.len())
            .filter(|&i| self.steps[i - 1] == Step::East && self.steps[i] == Step::North)
            .collect()
    }

    /// Peaks whose steps stay off the diagonal, i.e. the path is strictly
    /// below `y = x` just before the east step.
    pub fn high_peak_positions(&self) -> Vec<usize> {
        let mut height = vec![0i64; self.steps.len() + 1];
        for (i, s) in self.steps.iter().enumerate() {
            height[i + 1] = height[i] + if *s == Step::East { 1 } else { -1 };
        }
        self.peak_positions().into_iter().filter(|&i| height[i - 1] > 0).collect()
    }

    pub fn high_peak_count(&self) -> usize {
        self.high_peak_positions().len()
    }
}

impl std::fmt::Display for DyckPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::East { "e" } else { "n" })?;
        }
        Ok(())
    }
}

/// All Dyck paths of semilength `n`, lexicographic with `e < n`.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, east: usize, north: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if cur.len() == 2 * n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if east < n {
            cur.push(Step::East);
            rec(n, east + 1, north, cur, out);
            cur.pop();
        }
        if north < east {
            cur.push(Step::North);
            rec(n, east, north + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Reads an extension of `[2] x [n]` (natural labels `e + 1`) as a path:
/// odd labels are east steps, even labels north steps.
pub fn dyck_from_linext(pi: &LinearExtension) -> Result<DyckPath> {
    if !pi.len().is_multiple_of(2) {
        return Err(Error::WrongShape(format!("{} elements cannot form [2] x [n]", pi.len())));
    }
    let poset = product_with_chain(&Poset::chain(2), pi.len() / 2);
    if !super::is_linear_extension(&poset, pi.order()) {
        return Err(Error::WrongShape("order is not an extension of [2] x [n]".into()));
    }
    let steps = pi
        .order()
        .iter()
        .map(|&e| if e % 2 == 0 { Step::East } else { Step::North })
        .collect();
    DyckPath::new(steps)
}

/// Inverse of [`dyck_from_linext`]: the `j`-th east step is `(1, j)`, the
/// `j`-th north step is `(2, j)`.
pub fn linext_from_dyck(path: &DyckPath) -> LinearExtension {
    let (mut east, mut north) = (0, 0);
    let order = path
        .steps()
        .iter()
        .map(|s| match s {
            Step::East => {
                east += 1;
                2 * (east - 1)
            }
            Step::North => {
                north += 1;
                2 * (north - 1) + 1
            }
        })
        .collect();
    LinearExtension { order }
}
