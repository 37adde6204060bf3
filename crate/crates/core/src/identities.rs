//! Coefficientwise checks of the two hexagonal theta identities
//!
//! ```text
//! a(q)         = a(q^4) + 6 q psi(q^2) psi(q^6)
//! phi(q)phi(q^3) = a(q^4) + 2 q psi(q^2) psi(q^6)
//! ```
//!
//! and of the coefficient relations obtained from them by multiplying with a
//! theta factor (and possibly substituting `q -> q^k` first). Each relation
//! is checked twice: once by comparing enumeration counts from
//! [`crate::repcount`] and once by comparing series products from
//! [`crate::qseries`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{hex_theta_series, phi_series, psi_series, TruncatedSeries};
use crate::repcount::{count_ternary_mixed, m_mixed, r3, TernaryMixedForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Verified,
    /// Smallest index where the two sides differ.
    Failed { n: u64, lhs: i64, rhs: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub order: u64,
    pub status: CheckStatus,
}

impl IdentityCheck {
    pub fn verified(&self) -> bool {
        self.status == CheckStatus::Verified
    }

    fn from_series(identity: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        let status = match lhs.first_difference(rhs).expect("sides share an order") {
            None => CheckStatus::Verified,
            Some((n, l, r)) => CheckStatus::Failed {
                n: n as u64,
                lhs: l,
                rhs: r,
            },
        };
        Self {
            identity: identity.to_string(),
            order: lhs.order() as u64,
            status,
        }
    }

    fn from_fn(identity: &str, order: u64, mut sides: impl FnMut(u64) -> (i64, i64)) -> Self {
        let status = (0..=order)
            .find_map(|n| {
                let (lhs, rhs) = sides(n);
                (lhs != rhs).then_some(CheckStatus::Failed { n, lhs, rhs })
            })
            .unwrap_or(CheckStatus::Verified);
        Self {
            identity: identity.to_string(),
            order,
            status,
        }
    }
}

/// `q psi(q^2) psi(q^6)`.
fn shifted_psi_pair(order: usize) -> TruncatedSeries {
    let psi = psi_series(order);
    psi.substitute_power(2)
        .mul(&psi.substitute_power(6))
        .expect("same order")
        .shift(1)
}

/// Right-hand sides with the given multiplier on the psi-product:
/// `a(q^4) + k q psi(q^2) psi(q^6)`.
fn base_rhs(order: usize, k: i64) -> TruncatedSeries {
    hex_theta_series(order)
        .substitute_power(4)
        .add(&shifted_psi_pair(order).scale(k))
        .expect("same order")
}

/// Left-hand sides `(a(q), phi(q) phi(q^3))`.
fn base_lhs(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let phi = phi_series(order);
    let phiphi3 = phi.mul(&phi.substitute_power(3)).expect("same order");
    (hex_theta_series(order), phiphi3)
}

/// Checks both base identities to `order`.
pub fn verify_base_identities(order: u64) -> (IdentityCheck, IdentityCheck) {
    let n = order as usize;
    let (a, phiphi3) = base_lhs(n);
    (
        IdentityCheck::from_series("a(q) = a(q^4) + 6q psi(q^2)psi(q^6)", &a, &base_rhs(n, 6)),
        IdentityCheck::from_series(
            "phi(q)phi(q^3) = a(q^4) + 2q psi(q^2)psi(q^6)",
            &phiphi3,
            &base_rhs(n, 2),
        ),
    )
}

/// `a(q) - phi(q)phi(q^3) = 4q psi(q^2)psi(q^6)`, the difference of the two
/// base identities.
pub fn verify_base_difference(order: u64) -> IdentityCheck {
    let n = order as usize;
    let (a, phiphi3) = base_lhs(n);
    IdentityCheck::from_series(
        "a(q) - phi(q)phi(q^3) = 4q psi(q^2)psi(q^6)",
        &a.sub(&phiphi3).expect("same order"),
        &shifted_psi_pair(n).scale(4),
    )
}

/// Which multiplied form of the base identities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationCase {
    /// Multiply by `phi(q)`.
    C1a,
    /// Multiply by `phi(q^2)`; even and odd indices separate.
    C1b,
    /// Substitute `q -> q^3`, then multiply by `phi(q)`.
    C3,
    /// Substitute `q -> q^4`, then multiply by `phi(q)`.
    C4,
}

impl RelationCase {
    pub const ALL: [RelationCase; 4] = [
        RelationCase::C1a,
        RelationCase::C1b,
        RelationCase::C3,
        RelationCase::C4,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RelationCase::C1a => "C1a",
            RelationCase::C1b => "C1b",
            RelationCase::C3 => "C3",
            RelationCase::C4 => "C4",
        }
    }
}

impl fmt::Display for RelationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationCase::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub case: String,
    pub order: u64,
    pub enumeration: Vec<IdentityCheck>,
    pub series: Vec<IdentityCheck>,
}

impl RelationReport {
    pub fn routes_agree(&self) -> bool {
        self.enumeration.len() == self.series.len()
            && self
                .enumeration
                .iter()
                .zip(&self.series)
                .all(|(e, s)| e.verified() == s.verified())
    }

    pub fn verified(&self) -> bool {
        self.routes_agree()
            && self.enumeration.iter().all(IdentityCheck::verified)
            && self.series.iter().all(IdentityCheck::verified)
    }
}

fn ternary(a: u64, c: u64, n: u64) -> i64 {
    count_ternary_mixed(TernaryMixedForm { a, c }, n) as i64
}

/// `m_{alpha-beta,gamma}(n - shift)`, zero below the shift.
fn m_shifted(alpha: u64, beta: u64, gamma: u64, n: u64, shift: u64) -> i64 {
    n.checked_sub(shift)
        .map_or(0, |k| m_mixed(alpha, beta, gamma, k) as i64)
}

/// The relations for a case checked through enumeration counts.
///
/// For `C1a`, `C3`, `C4` with scale `s` (1, 3, 4) and diagonal form
/// `x^2 + s y^2 + 3s z^2`:
///
/// ```text
/// A^1_s(n)        = A^1_{4s}(n) + 6 m_{1-2s,6s}(n - s)
/// r_{1,s,3s}(n)   = A^1_{4s}(n) + 2 m_{1-2s,6s}(n - s)
/// ```
fn enumeration_checks(case: RelationCase, order: u64) -> Vec<IdentityCheck> {
    match case {
        RelationCase::C1b => vec![
            IdentityCheck::from_fn("A^2_1(n) = [even] A^1_2(n/2) + [odd] 6m_{1-1,3}((n-1)/2)", order, |n| {
                let rhs = if n % 2 == 0 {
                    ternary(1, 2, n / 2)
                } else {
                    6 * m_mixed(1, 1, 3, n / 2) as i64
                };
                (ternary(2, 1, n), rhs)
            }),
            IdentityCheck::from_fn("r_{1,2,3}(n) = [even] A^1_2(n/2) + [odd] 2m_{1-1,3}((n-1)/2)", order, |n| {
                let rhs = if n % 2 == 0 {
                    ternary(1, 2, n / 2)
                } else {
                    2 * m_mixed(1, 1, 3, n / 2) as i64
                };
                (r3(1, 2, 3, n) as i64, rhs)
            }),
        ],
        _ => {
            let s = scale_of(case);
            let t = 4 * s;
            vec![
                IdentityCheck::from_fn(
                    &format!("A^1_{s}(n) = A^1_{t}(n) + 6m_{{1-{},{}}}(n-{s})", 2 * s, 6 * s),
                    order,
                    |n| (ternary(1, s, n), ternary(1, t, n) + 6 * m_shifted(1, 2 * s, 6 * s, n, s)),
                ),
                IdentityCheck::from_fn(
                    &format!("r_{{1,{s},{}}}(n) = A^1_{t}(n) + 2m_{{1-{},{}}}(n-{s})", 3 * s, 2 * s, 6 * s),
                    order,
                    |n| {
                        (
                            r3(1, s, 3 * s, n) as i64,
                            ternary(1, t, n) + 2 * m_shifted(1, 2 * s, 6 * s, n, s),
                        )
                    },
                ),
            ]
        }
    }
}

fn scale_of(case: RelationCase) -> u64 {
    match case {
        RelationCase::C1a | RelationCase::C1b => 1,
        RelationCase::C3 => 3,
        RelationCase::C4 => 4,
    }
}

/// The same relations as products of theta series. No enumeration counts
/// are used on this route.
fn series_checks(case: RelationCase, order: u64) -> Vec<IdentityCheck> {
    let n = order as usize;
    let phi = phi_series(n);
    let (multiplier, power) = match case {
        RelationCase::C1a => (phi.clone(), 1),
        RelationCase::C1b => (phi.substitute_power(2), 1),
        RelationCase::C3 => (phi.clone(), 3),
        RelationCase::C4 => (phi.clone(), 4),
    };
    let (a, phiphi3) = base_lhs(n);
    let times = |s: &TruncatedSeries| {
        multiplier
            .mul(&s.substitute_power(power))
            .expect("same order")
    };
    let label = match case {
        RelationCase::C1a => "phi(q)",
        RelationCase::C1b => "phi(q^2)",
        RelationCase::C3 => "phi(q) with q -> q^3",
        RelationCase::C4 => "phi(q) with q -> q^4",
    };
    vec![
        IdentityCheck::from_series(
            &format!("{label} * [a(q) = a(q^4) + 6q psi(q^2)psi(q^6)]"),
            &times(&a),
            &times(&base_rhs(n, 6)),
        ),
        IdentityCheck::from_series(
            &format!("{label} * [phi(q)phi(q^3) = a(q^4) + 2q psi(q^2)psi(q^6)]"),
            &times(&phiphi3),
            &times(&base_rhs(n, 2)),
        ),
    ]
}

pub fn verify_coefficient_relations(case: RelationCase, order: u64) -> RelationReport {
    let (enumeration, series) = rayon::join(
        || enumeration_checks(case, order),
        || series_checks(case, order),
    );
    RelationReport {
        case: case.to_string(),
        order,
        enumeration,
        series,
    }
}

/// Positivity transfer for the `x^2 + (y^2 + yz + z^2)` case:
/// `A^1_1(n) > 0` iff `A^1_4(n) > 0` or `m_{1-2,6}(n-1) > 0`.
/// Returns the first `n` where it fails.
pub fn positivity_transfer_failure(order: u64) -> Option<u64> {
    (0..=order).find(|&n| {
        let lhs = ternary(1, 1, n) > 0;
        let rhs = ternary(1, 4, n) > 0 || m_shifted(1, 2, 6, n, 1) > 0;
        lhs != rhs
    })
}
