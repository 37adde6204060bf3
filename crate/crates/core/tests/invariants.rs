use quaternary_forms::classify::{
    classify_all, classify_forms, escalator_passes, first_gap, is_universal,
    known_universal_triples, search_box, Form,
};
use quaternary_forms::exclusions::{excluded_for, LemmaId};
use quaternary_forms::identities::{positivity_transfer_failure, verify_base_difference};
use quaternary_forms::QuaternaryForm;

#[test]
fn classification_is_stable_when_bound_grows() {
    let at_2000 = classify_all(2, 10, 6, 2000).unwrap();
    let at_5000 = classify_all(2, 10, 6, 5000).unwrap();
    assert_eq!(at_2000.universal_triples, at_5000.universal_triples);
    assert_eq!(at_2000.rejected, at_5000.rejected);
    assert_eq!(at_2000.universal_triples, known_universal_triples());
}

#[test]
fn box_without_c_equal_two() {
    let forms: Vec<QuaternaryForm> = search_box(2, 10, 6)
        .into_iter()
        .filter(|f| f.c != 2)
        .collect();
    let report = classify_forms(&forms, 2000);
    let expected: Vec<_> = known_universal_triples()
        .into_iter()
        .filter(|t| t.2 != 2)
        .collect();
    assert_eq!(expected.len(), 17);
    assert_eq!(report.universal_triples, expected);
}

#[test]
fn rejections_carry_checkable_witnesses() {
    let report = classify_all(2, 10, 6, 2000).unwrap();
    for r in &report.rejected {
        let (a, b, c) = r.triple;
        let f = QuaternaryForm::new(a, b, c).unwrap();
        assert_eq!(quaternary_forms::repcount::count_quaternary(f, r.witness), 0);
        assert!((0..r.witness).all(|n| quaternary_forms::repcount::count_quaternary(f, n) > 0));
    }
}

#[test]
fn universal_reports() {
    for (a, b, c) in [(2, 10, 1), (1, 5, 2), (1, 2, 4), (1, 6, 1)] {
        let r = is_universal(QuaternaryForm::new(a, b, c).unwrap(), 2000).unwrap();
        assert!(r.universal_to_bound() && !r.theorem_violation, "({a},{b},{c})");
    }
    let r = is_universal(QuaternaryForm::new(1, 7, 1).unwrap(), 2000).unwrap();
    assert_eq!(r.first_gap, Some(6));
    assert!(!r.theorem_violation);
    // the escalator set is exactly what the c <= 4 cases need
    for (a, b, c) in known_universal_triples() {
        assert!(escalator_passes(QuaternaryForm::new(a, b, c).unwrap()).passed());
    }
}

#[test]
fn c_at_least_five_never_universal() {
    for c in 5..=12 {
        for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 2)] {
            let f = QuaternaryForm::new(a, b, c).unwrap();
            assert!(first_gap(Form::Quaternary(f), 50).is_some(), "({a},{b},{c})");
        }
    }
}

#[test]
fn base_difference_and_positivity_transfer() {
    assert!(verify_base_difference(10_000).verified());
    assert_eq!(positivity_transfer_failure(3000), None);
}

#[test]
fn l113_and_p11_exclude_the_same_integers() {
    assert!((0..=5000).all(|n| excluded_for(LemmaId::L113, n) == excluded_for(LemmaId::P11, n)));
}
