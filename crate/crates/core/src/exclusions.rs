//! Arithmetic exclusion sets for the ternary forms used in the
//! classification, each checked against brute-force counts.
//!
//! A family is either a plain progression `{m l + r}` or a scaled one
//! `{s^k (m l + r) : k, l >= 0}`. Scaled membership strips every factor of
//! `s` first, which is only well defined when `s` does not divide `r`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repcount::{count_ternary_mixed, r3, TernaryMixedForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExclusionFamily {
    scale: u64,
    modulus: u64,
    residue: u64,
    allows_scaling: bool,
}

impl ExclusionFamily {
    /// `{m l + r : l >= 0}`.
    pub fn progression(modulus: u64, residue: u64) -> Result<Self> {
        Self::build(1, modulus, residue, false)
    }

    /// `{s^k (m l + r) : k, l >= 0}`.
    pub fn scaled(scale: u64, modulus: u64, residue: u64) -> Result<Self> {
        Self::build(scale, modulus, residue, true)
    }

    fn build(scale: u64, modulus: u64, residue: u64, allows_scaling: bool) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidFamily("modulus must be positive".into()));
        }
        if residue >= modulus {
            return Err(Error::InvalidFamily(format!(
                "residue {residue} not reduced modulo {modulus}"
            )));
        }
        if allows_scaling {
            if scale < 2 {
                return Err(Error::InvalidFamily(format!(
                    "scaling factor must exceed 1, got {scale}"
                )));
            }
            // every member of m l + r must be non-divisible by s
            if residue.is_multiple_of(scale) || !modulus.is_multiple_of(scale) {
                return Err(Error::InvalidFamily(format!(
                    "{scale}^k({modulus}l+{residue}) cannot be tested by stripping factors of {scale}"
                )));
            }
        }
        Ok(Self {
            scale,
            modulus,
            residue,
            allows_scaling,
        })
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn allows_scaling(&self) -> bool {
        self.allows_scaling
    }

    pub fn contains(&self, n: u64) -> bool {
        let mut n = n;
        if self.allows_scaling {
            if n == 0 {
                return false;
            }
            while n.is_multiple_of(self.scale) {
                n /= self.scale;
            }
        }
        n % self.modulus == self.residue
    }

    /// Same family with the residue moved up by one (mod m). Used as a
    /// negative control: the shifted set must disagree with the counts.
    pub fn with_residue_shifted(&self) -> Result<Self> {
        Self::build(
            self.scale,
            self.modulus,
            (self.residue + 1) % self.modulus,
            self.allows_scaling,
        )
    }
}

impl fmt::Display for ExclusionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.allows_scaling {
            write!(f, "{}^k({}l+{})", self.scale, self.modulus, self.residue)
        } else {
            write!(f, "{}l+{}", self.modulus, self.residue)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionSet {
    pub families: Vec<ExclusionFamily>,
}

impl ExclusionSet {
    pub fn new(families: Vec<ExclusionFamily>) -> Self {
        Self { families }
    }

    pub fn contains(&self, n: u64) -> bool {
        self.families.iter().any(|f| f.contains(n))
    }
}

impl fmt::Display for ExclusionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.families.iter().map(|fam| fam.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// The ternary forms whose exact value sets are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaId {
    /// `x^2 + y^2 + 3z^2`
    L113,
    /// `x^2 + 2y^2 + 3z^2`
    L123a,
    /// `x^2 + 2(y^2 + yz + z^2)`
    L123b,
    /// `x^2 + 3y^2 + 9z^2`
    L139,
    /// `x^2 + 4y^2 + 12z^2`
    L1412,
    /// `x^2 + (y^2 + yz + z^2)`
    P11,
    /// `2x^2 + (y^2 + yz + z^2)`
    P21,
    /// `x^2 + 3(y^2 + yz + z^2)`
    P13,
    /// `x^2 + 4(y^2 + yz + z^2)`
    P14,
}

/// How the brute-force side counts representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TernaryShape {
    Diagonal(u64, u64, u64),
    Mixed(TernaryMixedForm),
}

impl TernaryShape {
    pub fn count(&self, n: u64) -> u64 {
        match *self {
            TernaryShape::Diagonal(a, b, c) => r3(a, b, c, n),
            TernaryShape::Mixed(f) => count_ternary_mixed(f, n),
        }
    }
}

impl fmt::Display for TernaryShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TernaryShape::Diagonal(a, b, c) => write!(f, "{a}x^2 + {b}y^2 + {c}z^2"),
            TernaryShape::Mixed(m) => m.fmt(f),
        }
    }
}

impl LemmaId {
    pub const ALL: [LemmaId; 9] = [
        LemmaId::L113,
        LemmaId::L123a,
        LemmaId::L123b,
        LemmaId::L139,
        LemmaId::L1412,
        LemmaId::P11,
        LemmaId::P21,
        LemmaId::P13,
        LemmaId::P14,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::L113 => "L113",
            LemmaId::L123a => "L123a",
            LemmaId::L123b => "L123b",
            LemmaId::L139 => "L139",
            LemmaId::L1412 => "L1412",
            LemmaId::P11 => "P11",
            LemmaId::P21 => "P21",
            LemmaId::P13 => "P13",
            LemmaId::P14 => "P14",
        }
    }

    pub fn shape(&self) -> TernaryShape {
        let mixed = |a, c| TernaryShape::Mixed(TernaryMixedForm { a, c });
        match self {
            LemmaId::L113 => TernaryShape::Diagonal(1, 1, 3),
            LemmaId::L123a => TernaryShape::Diagonal(1, 2, 3),
            LemmaId::L123b => mixed(1, 2),
            LemmaId::L139 => TernaryShape::Diagonal(1, 3, 9),
            LemmaId::L1412 => TernaryShape::Diagonal(1, 4, 12),
            LemmaId::P11 => mixed(1, 1),
            LemmaId::P21 => mixed(2, 1),
            LemmaId::P13 => mixed(1, 3),
            LemmaId::P14 => mixed(1, 4),
        }
    }

    pub fn exclusion_set(&self) -> ExclusionSet {
        // all parameters below are valid by construction
        let nine = || ExclusionFamily::scaled(9, 9, 6).unwrap();
        let plain = |m, r| ExclusionFamily::progression(m, r).unwrap();
        let families = match self {
            LemmaId::L113 | LemmaId::P11 => vec![nine()],
            LemmaId::L123a | LemmaId::P21 => vec![ExclusionFamily::scaled(4, 16, 10).unwrap()],
            LemmaId::L123b => vec![ExclusionFamily::scaled(4, 8, 5).unwrap()],
            LemmaId::L139 | LemmaId::P13 => vec![plain(3, 2), nine()],
            LemmaId::L1412 | LemmaId::P14 => vec![plain(4, 2), plain(4, 3), nine()],
        };
        ExclusionSet::new(families)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

pub fn excluded_for(lemma: LemmaId, n: u64) -> bool {
    lemma.exclusion_set().contains(n)
}

/// A point where the brute-force count and the exclusion predicate disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub n: u64,
    pub count: u64,
    pub excluded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub form: String,
    pub exclusion_set: String,
    pub bound: u64,
    /// Ascending in `n`.
    pub discrepancies: Vec<Discrepancy>,
}

impl LemmaReport {
    pub fn verified(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares `shape.count(n) > 0` with `!set.contains(n)` for every
/// `n <= bound`.
pub fn verify_exclusion_set(shape: TernaryShape, set: &ExclusionSet, bound: u64) -> Vec<Discrepancy> {
    (0..=bound)
        .into_par_iter()
        .filter_map(|n| {
            let count = shape.count(n);
            let excluded = set.contains(n);
            ((count > 0) == excluded).then_some(Discrepancy { n, count, excluded })
        })
        .collect()
}

pub fn verify_lemma(lemma: LemmaId, bound: u64) -> LemmaReport {
    let set = lemma.exclusion_set();
    let shape = lemma.shape();
    LemmaReport {
        lemma: lemma.to_string(),
        form: shape.to_string(),
        exclusion_set: set.to_string(),
        bound,
        discrepancies: verify_exclusion_set(shape, &set, bound),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_membership() {
        let nine = ExclusionFamily::scaled(9, 9, 6).unwrap();
        assert!(nine.contains(6));
        assert!(nine.contains(54));
        assert!(nine.contains(15));
        assert!(!nine.contains(0));
        assert!(!nine.contains(18));
        assert!(!ExclusionFamily::scaled(4, 16, 10).unwrap().contains(2));
        assert!(ExclusionFamily::scaled(4, 16, 10).unwrap().contains(40));
        let three = ExclusionFamily::progression(3, 2).unwrap();
        assert!(three.contains(2) && three.contains(8) && !three.contains(6));
    }

    #[test]
    fn invalid_families_are_rejected() {
        assert!(ExclusionFamily::scaled(9, 9, 0).is_err());
        assert!(ExclusionFamily::scaled(1, 9, 6).is_err());
        assert!(ExclusionFamily::scaled(4, 6, 1).is_err());
        assert!(ExclusionFamily::progression(0, 0).is_err());
        assert!(ExclusionFamily::progression(4, 4).is_err());
    }

    #[test]
    fn excluded_for_examples() {
        assert!(excluded_for(LemmaId::P21, 10));
        assert!(excluded_for(LemmaId::L123b, 5));
        assert!(!excluded_for(LemmaId::P13, 4));
    }

    #[test]
    fn lemma_ids_parse() {
        for id in LemmaId::ALL {
            assert_eq!(id.as_str().parse::<LemmaId>().unwrap(), id);
        }
        assert_eq!(
            "L999".parse::<LemmaId>(),
            Err(Error::UnknownLemma("L999".into()))
        );
    }

    #[test]
    fn small_bound_verification() {
        for id in LemmaId::ALL {
            assert!(verify_lemma(id, 300).verified(), "{id}");
        }
    }

    #[test]
    fn corrupted_residue_is_caught() {
        let fam = ExclusionFamily::scaled(9, 9, 7).unwrap();
        let d = verify_exclusion_set(LemmaId::P11.shape(), &ExclusionSet::new(vec![fam]), 100);
        assert!(!d.is_empty());
        assert_eq!(d[0].n, 6);
    }

    #[test]
    fn display() {
        assert_eq!(LemmaId::P14.exclusion_set().to_string(), "4l+2, 4l+3, 9^k(9l+6)");
    }
}
