//! Exact representation counts by direct enumeration.
//!
//! These are the ground truth the series identities and exclusion sets are
//! checked against, so every counter here enumerates lattice points and
//! never consults a closed formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a x^2 + c (y^2 + yz + z^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TernaryMixedForm {
    pub a: u64,
    pub c: u64,
}

impl TernaryMixedForm {
    pub fn new(a: u64, c: u64) -> Result<Self> {
        if a == 0 || c == 0 {
            return Err(Error::InvalidForm(format!(
                "coefficients must be positive, got a={a}, c={c}"
            )));
        }
        Ok(Self { a, c })
    }
}

impl fmt::Display for TernaryMixedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x^2 + {}(y^2 + yz + z^2)", self.a, self.c)
    }
}

/// `a x^2 + b y^2 + c (z^2 + zw + w^2)` with `1 <= a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuaternaryForm {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl QuaternaryForm {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidForm(format!(
                "coefficients must be positive, got ({a},{b},{c})"
            )));
        }
        if a > b {
            return Err(Error::InvalidForm(format!(
                "expected a <= b, got ({a},{b},{c})"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// Like [`QuaternaryForm::new`] but swaps `a` and `b` when needed; the
    /// two square terms play symmetric roles.
    pub fn normalized(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(a.min(b), a.max(b), c)
    }

    /// The ternary form left after dropping the `b y^2` term.
    pub fn ternary_part(&self) -> TernaryMixedForm {
        TernaryMixedForm {
            a: self.a,
            c: self.c,
        }
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }
}

impl fmt::Display for QuaternaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x^2 + {}y^2 + {}(z^2 + zw + w^2)",
            self.a, self.b, self.c
        )
    }
}

pub(crate) fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}

pub(crate) fn is_triangular(n: u64) -> bool {
    is_square(8 * n + 1)
}

/// Number of `(z, w)` in `Z^2` with `z^2 + zw + w^2 = n`.
///
/// For fixed `z` the equation is a quadratic in `w` with discriminant
/// `4n - 3z^2`; it has integer roots exactly when that is a perfect square
/// (parity always matches), giving one root at zero discriminant and two
/// otherwise.
pub fn count_hex(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let limit = (4 * n / 3).isqrt();
    let mut count = 0;
    for z in 0..=limit {
        let disc = 4 * n - 3 * z * z;
        if !is_square(disc) {
            continue;
        }
        let roots = if disc == 0 { 1 } else { 2 };
        count += if z == 0 { roots } else { 2 * roots };
    }
    count
}

/// Memoized `count_hex` for `0..=bound`, immutable once built.
#[derive(Debug, Clone)]
pub struct HexTable {
    counts: Vec<u32>,
}

impl HexTable {
    pub fn up_to(bound: u64) -> Self {
        let counts = (0..=bound).map(|n| count_hex(n) as u32).collect();
        Self { counts }
    }

    pub fn bound(&self) -> u64 {
        self.counts.len() as u64 - 1
    }

    #[inline]
    pub fn get(&self, n: u64) -> u64 {
        match self.counts.get(n as usize) {
            Some(&c) => c as u64,
            None => count_hex(n),
        }
    }
}

/// Largest `x >= 0` with `coef * x^2 <= n`.
fn square_radius(coef: u64, n: u64) -> u64 {
    (n / coef).isqrt()
}

/// Largest `x >= 0` with `coef * t_x <= n`.
fn triangular_radius(coef: u64, n: u64) -> u64 {
    let m = n / coef;
    ((8 * m + 1).isqrt() - 1) / 2
}

fn hex_times(hex: &HexTable, c: u64, rem: u64) -> u64 {
    if rem.is_multiple_of(c) {
        hex.get(rem / c)
    } else {
        0
    }
}

fn ternary_with(hex: &HexTable, f: TernaryMixedForm, n: u64) -> u64 {
    let mut total = hex_times(hex, f.c, n);
    for x in 1..=square_radius(f.a, n) {
        total += 2 * hex_times(hex, f.c, n - f.a * x * x);
    }
    total
}

fn quaternary_with(hex: &HexTable, f: QuaternaryForm, n: u64) -> u64 {
    let t = f.ternary_part();
    let mut total = ternary_with(hex, t, n);
    for y in 1..=square_radius(f.b, n) {
        total += 2 * ternary_with(hex, t, n - f.b * y * y);
    }
    total
}

fn quaternary_represents_with(hex: &HexTable, f: QuaternaryForm, n: u64) -> bool {
    for y in 0..=square_radius(f.b, n) {
        let after_y = n - f.b * y * y;
        for x in 0..=square_radius(f.a, after_y) {
            if hex_times(hex, f.c, after_y - f.a * x * x) > 0 {
                return true;
            }
        }
    }
    false
}

const EMPTY_TABLE: HexTable = HexTable { counts: Vec::new() };

/// `A^a_c(n)`: the number of `(x, y, z)` in `Z^3` with
/// `a x^2 + c (y^2 + yz + z^2) = n`.
pub fn count_ternary_mixed(f: TernaryMixedForm, n: u64) -> u64 {
    ternary_with(&EMPTY_TABLE, f, n)
}

/// Number of `(x, y, z, w)` in `Z^4` with `f(x, y, z, w) = n`.
pub fn count_quaternary(f: QuaternaryForm, n: u64) -> u64 {
    quaternary_with(&EMPTY_TABLE, f, n)
}

/// Counting with a shared memo table. Cheap to share between threads.
#[derive(Debug, Clone)]
pub struct RepCounter {
    hex: HexTable,
}

impl RepCounter {
    /// Counter whose hex table covers `0..=bound`. Larger arguments still
    /// work, they just fall back to direct counting.
    pub fn new(bound: u64) -> Self {
        Self {
            hex: HexTable::up_to(bound),
        }
    }

    pub fn hex(&self, n: u64) -> u64 {
        self.hex.get(n)
    }

    pub fn ternary(&self, f: TernaryMixedForm, n: u64) -> u64 {
        ternary_with(&self.hex, f, n)
    }

    pub fn quaternary(&self, f: QuaternaryForm, n: u64) -> u64 {
        quaternary_with(&self.hex, f, n)
    }

    /// Same as `quaternary(f, n) > 0`, stopping at the first solution.
    pub fn represents(&self, f: QuaternaryForm, n: u64) -> bool {
        quaternary_represents_with(&self.hex, f, n)
    }

    pub fn ternary_represents(&self, f: TernaryMixedForm, n: u64) -> bool {
        (0..=square_radius(f.a, n)).any(|x| hex_times(&self.hex, f.c, n - f.a * x * x) > 0)
    }
}

/// `r_{alpha,beta}(n)`: `alpha x^2 + beta y^2 = n` over `Z^2`.
pub fn r2(alpha: u64, beta: u64, n: u64) -> u64 {
    let mut total = 0;
    for x in 0..=square_radius(alpha, n) {
        let rem = n - alpha * x * x;
        if !rem.is_multiple_of(beta) || !is_square(rem / beta) {
            continue;
        }
        let xs = if x == 0 { 1 } else { 2 };
        let ys = if rem == 0 { 1 } else { 2 };
        total += xs * ys;
    }
    total
}

/// `t_{alpha,beta}(n)`: `alpha t_x + beta t_y = n` over `N_0^2`.
pub fn t2(alpha: u64, beta: u64, n: u64) -> u64 {
    (0..=triangular_radius(alpha, n))
        .filter(|&x| {
            let rem = n - alpha * (x * (x + 1) / 2);
            rem.is_multiple_of(beta) && is_triangular(rem / beta)
        })
        .count() as u64
}

/// `r_{alpha,beta,gamma}(n)`: `alpha x^2 + beta y^2 + gamma z^2 = n` over `Z^3`.
pub fn r3(alpha: u64, beta: u64, gamma: u64, n: u64) -> u64 {
    let mut total = r2(beta, gamma, n);
    for x in 1..=square_radius(alpha, n) {
        total += 2 * r2(beta, gamma, n - alpha * x * x);
    }
    total
}

/// `m_{alpha-beta,gamma}(n)`: `alpha x^2 + beta t_y + gamma t_z = n` over
/// `Z x N_0^2`.
pub fn m_mixed(alpha: u64, beta: u64, gamma: u64, n: u64) -> u64 {
    let mut total = t2(beta, gamma, n);
    for x in 1..=square_radius(alpha, n) {
        total += 2 * t2(beta, gamma, n - alpha * x * x);
    }
    total
}
