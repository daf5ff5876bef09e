use su3_outer::battery::run_battery;
use su3_outer::decompose::{csco_witness, resolve_detailed};
use su3_outer::factory::{C4PrimeCoefficients, CasimirOrder};
use su3_outer::oracle::tensor_decompose;
use su3_outer::verify::{truncation_stability, verify_casimir_commutation, verify_so42, Truncation};
use su3_outer::IrrepLabel;

#[test]
fn so42_stable_under_larger_truncation() {
    let (small, large) = truncation_stability(Truncation::new(4, 4), verify_so42).unwrap();
    assert!(small.passed() && large.passed());
    assert!(large.states_checked > small.states_checked);
}

#[test]
fn c2_commutes_at_small_truncation() {
    assert!(verify_casimir_commutation(CasimirOrder::Two, Truncation::new(7, 6)).unwrap().passed());
    assert!(verify_casimir_commutation(CasimirOrder::Two, Truncation::new(7, 4)).is_err());
}

#[test]
fn witnesses_separate_octet_copies() {
    let res = resolve_detailed(IrrepLabel::new(1, 1), IrrepLabel::new(1, 1), &C4PrimeCoefficients::default()).unwrap();
    let idx = res.report.terms.iter().position(|t| (t.p, t.q) == (1, 1)).unwrap();
    let a = csco_witness(&res, idx, 0).unwrap().tuple();
    let b = csco_witness(&res, idx, 1).unwrap().tuple();
    let differing: Vec<usize> = (0..a.len()).filter(|&i| a[i] != b[i]).collect();
    assert_eq!(differing.len(), 1);
}

#[test]
fn alternative_lambdas_still_match_oracle() {
    let coeffs = C4PrimeCoefficients::new([1, 1, 0, 0]);
    for row in run_battery(2, &coeffs).unwrap() {
        assert!(row.oracle_agreement && row.dimension_check, "{:?}", row.factors);
    }
}

#[test]
fn oracle_agrees_with_resolve_beyond_battery() {
    let (a, b) = (IrrepLabel::new(2, 1), IrrepLabel::new(1, 2));
    let res = resolve_detailed(a, b, &C4PrimeCoefficients::default()).unwrap();
    assert_eq!(res.report.multiplicities(), tensor_decompose(a, b).unwrap());
}
