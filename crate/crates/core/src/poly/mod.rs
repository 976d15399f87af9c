//! Integer polynomials with arbitrary-precision coefficients, and the named
//! descent polynomials built on them.

mod gamma;
mod named;

pub use gamma::GammaExpansion;
pub use named::{eulerian, eulerian_by_recurrence, hstar, narayana, order_polynomial_values};

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`. Never has
/// trailing zeros, so the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_big(coeffs)
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        Self::from_big(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn from_big(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From a histogram of counts, entry `i` being the coefficient of `x^i`.
    pub fn from_counts(counts: &[u128]) -> Self {
        Self::from_coeffs(counts.iter().copied())
    }

    /// `(1 + x)^d`.
    pub fn one_plus_x_pow(d: usize) -> Self {
        let mut row = vec![BigInt::one()];
        for _ in 0..d {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        Self::from_big(row)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `x^high p(1/x)`; `None` if the degree exceeds `high`.
    pub fn reflect(&self, high: usize) -> Option<Self> {
        if self.degree().is_some_and(|d| d > high) {
            return None;
        }
        Some(Self::from_big((0..=high).map(|i| self.coeff(high - i)).collect()))
    }

    /// True iff every nonzero term lies in `[low, high]` and the coefficient
    /// of `x^(low+i)` equals that of `x^(high-i)`; i.e. the polynomial
    /// satisfies `x^(low+high) p(1/x) = p(x)`.
    pub fn is_palindromic(&self, low: usize, high: usize) -> bool {
        if low > high {
            return false;
        }
        if self.lowest_degree().is_some_and(|l| l < low) || self.degree().is_some_and(|d| d > high) {
            return false;
        }
        (0..=(high - low) / 2).all(|i| self.coeff(low + i) == self.coeff(high - i))
    }

    /// Coefficients between the lowest and highest nonzero terms rise weakly
    /// and then fall weakly.
    pub fn is_unimodal(&self) -> bool {
        let Some(low) = self.lowest_degree() else {
            return true;
        };
        let c = &self.coeffs[low..];
        let mut i = 1;
        while i < c.len() && c[i] >= c[i - 1] {
            i += 1;
        }
        while i < c.len() && c[i] <= c[i - 1] {
            i += 1;
        }
        i == c.len()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as decimal strings, index = exponent.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    /// First `len` coefficients of the power series `p(x) / (1 - x)^k`.
    pub fn series_over_one_minus_x_pow(&self, k: usize, len: usize) -> Vec<BigInt> {
        let mut series: Vec<BigInt> = (0..len).map(|i| self.coeff(i)).collect();
        for _ in 0..k {
            // dividing by (1 - x) is taking prefix sums
            for i in 1..len {
                let prev = series[i - 1].clone();
                series[i] += prev;
            }
        }
        series
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if abs.is_one() && i > 0 { String::new() } else { abs.to_string() };
            match i {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    coeffs: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialJson { coeffs: self.to_decimal_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_big(coeffs))
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_big((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_big((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_big(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| &a + &b)
    }
}

impl<'a> Sum<&'a IntPolynomial> for IntPolynomial {
    fn sum<I: Iterator<Item = &'a IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| &a + b)
    }
}
