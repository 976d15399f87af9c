use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::IntPolynomial;

/// Coefficients of a polynomial in the basis `x^i (1 + x)^(d - 2i)`,
/// `0 <= i <= d / 2`. Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaExpansion {
    pub center_degree: usize,
    pub gamma: Vec<BigInt>,
}

impl GammaExpansion {
    /// Peels off `gamma_i x^i (1+x)^(d-2i)` from the lowest remaining term.
    /// `None` unless `p` is palindromic over `0..=d`.
    pub fn of(p: &IntPolynomial, d: usize) -> Option<Self> {
        if !p.is_palindromic(0, d) {
            return None;
        }
        let mut rest = p.clone();
        let mut gamma = Vec::with_capacity(d / 2 + 1);
        for i in 0..=d / 2 {
            let g = rest.coeff(i);
            if !g.is_zero() {
                let term = IntPolynomial::one_plus_x_pow(d - 2 * i).shift(i);
                rest = &rest - &(&term * &IntPolynomial::monomial(g.clone(), 0));
            }
            gamma.push(g);
        }
        debug_assert!(rest.is_zero(), "palindromic input peels to zero");
        Some(GammaExpansion { center_degree: d, gamma })
    }

    pub fn reconstruct(&self) -> IntPolynomial {
        let d = self.center_degree;
        self.gamma
            .iter()
            .enumerate()
            .map(|(i, g)| {
                &IntPolynomial::one_plus_x_pow(d - 2 * i).shift(i) * &IntPolynomial::monomial(g.clone(), 0)
            })
            .sum()
    }

    pub fn is_positive(&self) -> bool {
        self.gamma.iter().all(|g| !g.is_negative())
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.gamma.iter().position(Signed::is_negative)
    }

    /// The γ-vector with trailing zeros dropped.
    pub fn trimmed(&self) -> &[BigInt] {
        let end = self.gamma.iter().rposition(|g| !g.is_zero()).map_or(0, |i| i + 1);
        &self.gamma[..end]
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.gamma.iter().map(ToString::to_string).collect()
    }
}

impl Serialize for GammaExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            center_degree: usize,
            gamma: Vec<String>,
        }
        Raw { center_degree: self.center_degree, gamma: self.to_decimal_strings() }.serialize(s)
    }
}

impl IntPolynomial {
    pub fn gamma_expansion(&self, d: usize) -> Option<GammaExpansion> {
        GammaExpansion::of(self, d)
    }
}
