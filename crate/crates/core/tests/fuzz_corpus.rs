//! Replays the checked-in fuzz seeds through the same round-trip checks the
//! fuzz targets perform.

use std::path::PathBuf;

use su3_outer::decompose::DecompositionReport;
use su3_outer::fock::ExactMatrix;
use su3_outer::scalar::parse_rational;
use su3_outer::verify::{reports_from_json, VerificationReport};
use su3_outer::Scalar;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn scalar_seeds() {
    for (name, s) in seeds("parse_scalar") {
        let x: Scalar = s.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x, "{name}");
    }
}

#[test]
fn rational_seeds() {
    for (name, s) in seeds("parse_rational") {
        match parse_rational(&s) {
            Ok(r) => assert_eq!(parse_rational(&r.to_string()).unwrap(), r, "{name}"),
            Err(_) => assert_eq!(name, "zero_den"),
        }
    }
}

#[test]
fn matrix_seeds() {
    for (name, s) in seeds("matrix_json") {
        let m = ExactMatrix::from_json(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(ExactMatrix::from_json(&m.to_json()).unwrap(), m, "{name}");
    }
}

#[test]
fn report_seeds() {
    for (name, s) in seeds("report_json") {
        let parsed = VerificationReport::from_json(&s).is_ok()
            || reports_from_json(&s).is_ok()
            || DecompositionReport::from_json(&s).is_ok();
        assert!(parsed, "{name}");
    }
}
