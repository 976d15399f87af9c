//! Size caps for exhaustive computations.
//!
//! Every enumeration here is exponential in the poset size, so the caps are
//! checked up front and fail loudly instead of hanging.

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Default bound on the number of poset elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 64;

/// Default bound on `|P| * n` when summing over all of `S_n`.
pub const DEFAULT_MAX_BRUTE_FORCE_CELLS: usize = 12;

/// Environment variable that overrides [`DEFAULT_MAX_ELEMENTS`].
pub const CAP_ENV_VAR: &str = "CANONLAB_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_brute_force_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_brute_force_cells: DEFAULT_MAX_BRUTE_FORCE_CELLS,
        }
    }
}

impl Limits {
    /// Defaults, with the element cap taken from `CANONLAB_CAP` when it is set
    /// to a positive integer.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
        {
            limits.max_elements = cap;
        }
        limits
    }

    /// Effectively unbounded; for tests that deliberately go past the defaults.
    pub fn unbounded() -> Self {
        Limits {
            max_elements: usize::MAX,
            max_brute_force_cells: usize::MAX,
        }
    }

    pub fn with_brute_force_cells(mut self, cells: usize) -> Self {
        self.max_brute_force_cells = cells;
        self
    }

    pub fn check_size(&self, size: usize) -> Result<()> {
        if size > self.max_elements {
            return Err(Error::CapExceeded { size, cap: self.max_elements });
        }
        Ok(())
    }

    pub fn check_poset(&self, poset: &Poset) -> Result<()> {
        self.check_size(poset.len())
    }

    /// Checks a sum over `S_n` of enumerations on `base_size * n` elements.
    pub fn check_brute_force(&self, base_size: usize, n: usize) -> Result<()> {
        let cells = base_size.saturating_mul(n);
        if cells > self.max_brute_force_cells {
            return Err(Error::BruteForceCapExceeded {
                size: base_size,
                n,
                cells,
                cap: self.max_brute_force_cells,
            });
        }
        self.check_size(cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_cap_counts_cells() {
        let limits = Limits::default();
        assert!(limits.check_brute_force(3, 4).is_ok());
        assert!(matches!(
            limits.check_brute_force(3, 5),
            Err(Error::BruteForceCapExceeded { cells: 15, cap: 12, .. })
        ));
        assert!(limits.with_brute_force_cells(15).check_brute_force(3, 5).is_ok());
    }

    #[test]
    fn element_cap() {
        let limits = Limits::default();
        assert!(limits.check_size(64).is_ok());
        assert!(matches!(limits.check_size(65), Err(Error::CapExceeded { size: 65, cap: 64 })));
    }
}
