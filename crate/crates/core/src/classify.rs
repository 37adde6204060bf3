//! Universality scans, the six-element escalator test and classification of
//! all universal triples in a search box.
//!
//! A finite scan can only show "no gap up to N". A triple is reported as
//! universal when that holds and it also passes the escalator test; the
//! known classification theorem says the escalator test alone is decisive,
//! so any triple where the two disagree is flagged as a violation.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repcount::{QuaternaryForm, RepCounter, TernaryMixedForm};

/// Representing all of these makes `ax^2 + by^2 + c(z^2+zw+w^2)` universal.
pub const ESCALATOR_SET: [u64; 6] = [1, 2, 3, 5, 6, 10];

/// The critical integers of the general 290 criterion for positive definite
/// integral forms. Informational only; [`ESCALATOR_SET`] is its restriction
/// to the forms handled here.
pub const TWO_NINETY_SET: [u64; 29] = [
    1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 34, 35, 37, 42, 58, 93,
    110, 145, 203, 290,
];

pub const DEFAULT_SCAN_BOUND: u64 = 2000;

/// The triples `(a, b, c)` with `a <= b` known to give universal forms,
/// ordered by `(c, a, b)`.
pub fn known_universal_triples() -> Vec<(u64, u64, u64)> {
    let mut out = Vec::with_capacity(22);
    out.extend((1..=6).map(|b| (1, b, 1)));
    out.extend((2..=10).map(|b| (2, b, 1)));
    out.extend((1..=5).map(|b| (1, b, 2)));
    out.push((1, 2, 3));
    out.push((1, 2, 4));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Form {
    Quaternary(QuaternaryForm),
    Ternary(TernaryMixedForm),
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Quaternary(q) => q.fmt(f),
            Form::Ternary(t) => t.fmt(f),
        }
    }
}

fn represents(counter: &RepCounter, form: Form, n: u64) -> bool {
    match form {
        Form::Quaternary(q) => counter.represents(q, n),
        Form::Ternary(t) => counter.ternary_represents(t, n),
    }
}

/// Smallest `n <= bound` that `form` does not represent, using a shared
/// counter.
pub fn first_gap_with(counter: &RepCounter, form: Form, bound: u64) -> Option<u64> {
    (0..=bound).find(|&n| !represents(counter, form, n))
}

pub fn first_gap(form: Form, bound: u64) -> Option<u64> {
    first_gap_with(&RepCounter::new(bound), form, bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EscalatorVerdict {
    Pass,
    Fail { witness: u64 },
}

impl EscalatorVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, EscalatorVerdict::Pass)
    }
}

fn escalator_with(counter: &RepCounter, form: QuaternaryForm) -> EscalatorVerdict {
    ESCALATOR_SET
        .iter()
        .find(|&&n| !counter.represents(form, n))
        .map_or(EscalatorVerdict::Pass, |&witness| EscalatorVerdict::Fail { witness })
}

pub fn escalator_passes(form: QuaternaryForm) -> EscalatorVerdict {
    escalator_with(&RepCounter::new(10), form)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub form: Form,
    pub bound: u64,
    pub first_gap: Option<u64>,
    /// Only defined for quaternary forms.
    pub escalator: Option<EscalatorVerdict>,
    /// The scan and the escalator test disagree.
    pub theorem_violation: bool,
}

impl GapReport {
    pub fn universal_to_bound(&self) -> bool {
        self.first_gap.is_none()
    }
}

fn gap_report_with(counter: &RepCounter, form: QuaternaryForm, bound: u64) -> GapReport {
    let first_gap = first_gap_with(counter, Form::Quaternary(form), bound);
    let escalator = escalator_with(counter, form);
    GapReport {
        form: Form::Quaternary(form),
        bound,
        first_gap,
        escalator: Some(escalator),
        theorem_violation: first_gap.is_none() != escalator.passed(),
    }
}

pub fn is_universal(form: QuaternaryForm, bound: u64) -> Result<GapReport> {
    let minimum = *ESCALATOR_SET.last().unwrap();
    if bound < minimum {
        return Err(Error::BoundTooSmall { bound, minimum });
    }
    Ok(gap_report_with(&RepCounter::new(bound), form, bound))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub triple: (u64, u64, u64),
    pub witness: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub a_max: u64,
    pub b_max: u64,
    pub c_max: u64,
    pub bound: u64,
    /// Sorted by `(c, a, b)`.
    pub universal_triples: Vec<(u64, u64, u64)>,
    /// Every scanned triple with a gap, and its smallest gap; same order.
    pub rejected: Vec<Rejection>,
    /// Triples where the scan and the escalator test disagree.
    pub theorem_violations: Vec<(u64, u64, u64)>,
}

fn by_c_first(t: &(u64, u64, u64)) -> (u64, u64, u64) {
    (t.2, t.0, t.1)
}

/// All `(a, b, c)` with `1 <= a <= min(a_max, b)`, `b <= b_max`,
/// `1 <= c <= c_max`, in `(c, a, b)` order.
pub fn search_box(a_max: u64, b_max: u64, c_max: u64) -> Vec<QuaternaryForm> {
    let mut out = Vec::new();
    for c in 1..=c_max {
        for a in 1..=a_max.min(b_max) {
            for b in a..=b_max {
                out.push(QuaternaryForm { a, b, c });
            }
        }
    }
    out
}

/// Scans an arbitrary list of forms. Box dimensions in the report are the
/// coordinatewise maxima of the list.
pub fn classify_forms(forms: &[QuaternaryForm], bound: u64) -> ClassificationReport {
    let counter = RepCounter::new(bound);
    let reports: Vec<GapReport> = forms
        .par_iter()
        .map(|&f| gap_report_with(&counter, f, bound))
        .collect();

    let mut universal_triples = Vec::new();
    let mut rejected = Vec::new();
    let mut theorem_violations = Vec::new();
    for (form, report) in forms.iter().zip(&reports) {
        let triple = form.triple();
        match report.first_gap {
            None => universal_triples.push(triple),
            Some(witness) => rejected.push(Rejection { triple, witness }),
        }
        if report.theorem_violation {
            theorem_violations.push(triple);
        }
    }
    universal_triples.sort_by_key(by_c_first);
    rejected.sort_by_key(|r| by_c_first(&r.triple));
    theorem_violations.sort_by_key(by_c_first);

    ClassificationReport {
        a_max: forms.iter().map(|f| f.a).max().unwrap_or(0),
        b_max: forms.iter().map(|f| f.b).max().unwrap_or(0),
        c_max: forms.iter().map(|f| f.c).max().unwrap_or(0),
        bound,
        universal_triples,
        rejected,
        theorem_violations,
    }
}

/// Classifies the whole box. The box must contain every known universal
/// triple.
pub fn classify_all(a_max: u64, b_max: u64, c_max: u64, bound: u64) -> Result<ClassificationReport> {
    if a_max < 2 || b_max < 10 || c_max < 4 {
        return Err(Error::UndersizedBox { a_max, b_max, c_max });
    }
    let minimum = *ESCALATOR_SET.last().unwrap();
    if bound < minimum {
        return Err(Error::BoundTooSmall { bound, minimum });
    }
    let mut report = classify_forms(&search_box(a_max, b_max, c_max), bound);
    report.a_max = a_max;
    report.b_max = b_max;
    report.c_max = c_max;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TernaryGap {
    Gap { n: u64 },
    /// No gap up to the bound. Never a universality claim.
    Inconclusive { bound: u64 },
}

pub fn ternary_first_gap(form: TernaryMixedForm, bound: u64) -> TernaryGap {
    match first_gap(Form::Ternary(form), bound) {
        Some(n) => TernaryGap::Gap { n },
        None => TernaryGap::Inconclusive { bound },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: u64, b: u64, c: u64) -> QuaternaryForm {
        QuaternaryForm::new(a, b, c).unwrap()
    }

    #[test]
    fn gap_examples() {
        assert_eq!(first_gap(Form::Quaternary(q(1, 2, 5)), 100), Some(10));
        assert_eq!(first_gap(Form::Quaternary(q(1, 2, 6)), 100), Some(5));
        assert_eq!(first_gap(Form::Quaternary(q(1, 1, 3)), 100), Some(6));
        assert_eq!(first_gap(Form::Quaternary(q(1, 2, 4)), 300), None);
    }

    #[test]
    fn escalator_examples() {
        assert_eq!(escalator_passes(q(1, 2, 4)), EscalatorVerdict::Pass);
        assert_eq!(
            escalator_passes(q(1, 1, 3)),
            EscalatorVerdict::Fail { witness: 6 }
        );
        // c = 1 already covers 1, and 2 is neither hexagonal nor >= 3
        assert_eq!(
            escalator_passes(q(3, 3, 1)),
            EscalatorVerdict::Fail { witness: 2 }
        );
        assert_eq!(
            escalator_passes(q(3, 3, 2)),
            EscalatorVerdict::Fail { witness: 1 }
        );
    }

    #[test]
    fn is_universal_requires_escalator_bound() {
        assert_eq!(
            is_universal(q(1, 1, 1), 9),
            Err(Error::BoundTooSmall {
                bound: 9,
                minimum: 10
            })
        );
        let r = is_universal(q(2, 10, 1), 500).unwrap();
        assert!(r.universal_to_bound() && !r.theorem_violation);
        let r = is_universal(q(1, 7, 1), 500).unwrap();
        assert!(r.first_gap.is_some() && !r.theorem_violation);
    }

    #[test]
    fn undersized_box() {
        assert!(matches!(
            classify_all(1, 10, 4, 100),
            Err(Error::UndersizedBox { .. })
        ));
        assert!(matches!(classify_all(2, 9, 4, 100), Err(Error::UndersizedBox { .. })));
        assert!(matches!(classify_all(2, 10, 3, 100), Err(Error::UndersizedBox { .. })));
    }

    #[test]
    fn degenerate_list() {
        let r = classify_forms(&[q(1, 1, 1)], 10);
        assert_eq!(r.universal_triples, vec![(1, 1, 1)]);
        assert!(r.rejected.is_empty());
    }

    #[test]
    fn ternary_examples() {
        let t = |a, c| TernaryMixedForm::new(a, c).unwrap();
        assert_eq!(ternary_first_gap(t(1, 1), 100), TernaryGap::Gap { n: 6 });
        assert_eq!(ternary_first_gap(t(1, 2), 100), TernaryGap::Gap { n: 5 });
        assert_eq!(ternary_first_gap(t(3, 5), 100), TernaryGap::Gap { n: 1 });
        assert_eq!(
            ternary_first_gap(t(1, 1), 5),
            TernaryGap::Inconclusive { bound: 5 }
        );
    }

    #[test]
    fn known_list_shape() {
        let known = known_universal_triples();
        assert_eq!(known.len(), 22);
        let mut sorted = known.clone();
        sorted.sort_by_key(by_c_first);
        assert_eq!(sorted, known);
        assert!(ESCALATOR_SET.iter().all(|n| TWO_NINETY_SET.contains(n)));
    }
}
