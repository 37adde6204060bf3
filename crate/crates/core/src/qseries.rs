//! Truncated power series in `q` with exact integer coefficients, and the
//! three theta series the rest of the crate is built on:
//!
//! * `phi(q) = sum_{n in Z} q^{n^2}`
//! * `psi(q) = sum_{n >= 0} q^{n(n+1)/2}`
//! * `a(q)   = sum_{m,n in Z} q^{m^2 + mn + n^2}`
//!
//! A series of order `N` keeps the coefficients of `q^0 ..= q^N`. Products
//! and shifts drop everything past `N` without complaint.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1;
        s
    }

    /// Builds a series of the given order from a coefficient prefix. Missing
    /// trailing coefficients are zero; coefficients past `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (dst, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^n`, or zero past the truncation order.
    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the common order.
    ///
    /// Theta series are very sparse, so the outer loop runs over the nonzero
    /// coefficients of whichever factor has fewer of them.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let (sparse, dense) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let order = self.order();
        let mut out = vec![0i64; order + 1];
        for (i, &x) in sparse.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in out[i..].iter_mut().zip(&dense.coeffs[..=order - i]) {
                *o += x * y;
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| k * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        if k <= self.order() {
            let keep = self.order() + 1 - k;
            out.coeffs[k..].copy_from_slice(&self.coeffs[..keep]);
        }
        out
    }

    /// Replaces `q` by `q^m`. Panics if `m == 0`.
    pub fn substitute_power(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        let mut out = Self::zero(self.order());
        for (i, &c) in self.coeffs.iter().enumerate() {
            let Some(j) = i.checked_mul(m) else { break };
            if j > self.order() {
                break;
            }
            out.coeffs[j] = c;
        }
        out
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Index and both values of the first coefficient where the two series
    /// differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<(usize, i64, i64)>> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (x, y))| x != y)
            .map(|(n, (&x, &y))| (n, x, y)))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (n, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{abs}q")?,
                (_, 1) => write!(f, "q^{n}")?,
                _ => write!(f, "{abs}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `phi(q)` truncated at `order`.
pub fn phi_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    s.coeffs[0] = 1;
    let mut x = 1usize;
    while x * x <= order {
        s.coeffs[x * x] += 2;
        x += 1;
    }
    s
}

/// `psi(q)` truncated at `order`.
pub fn psi_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut x = 0usize;
    while x * (x + 1) / 2 <= order {
        s.coeffs[x * (x + 1) / 2] += 1;
        x += 1;
    }
    s
}

/// Enumeration radius for the hexagonal theta series. Any pair with
/// `m^2 + mk + k^2 <= n` has `|m|, |k| <= sqrt(4n/3)`, which this exceeds.
pub fn hex_enumeration_radius(order: usize) -> i64 {
    2 * (order as u64).isqrt() as i64 + 2
}

/// `a(q)` truncated at `order`, built by enumerating the square
/// `[-B, B]^2` with `B = hex_enumeration_radius(order)`.
pub fn hex_theta_series(order: usize) -> TruncatedSeries {
    hex_theta_series_with_radius(order, hex_enumeration_radius(order))
}

pub(crate) fn hex_theta_series_with_radius(order: usize, radius: i64) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let order = order as i64;
    for m in -radius..=radius {
        for k in -radius..=radius {
            let norm = m * m + m * k + k * k;
            if norm <= order {
                s.coeffs[norm as usize] += 1;
            }
        }
    }
    s
}
