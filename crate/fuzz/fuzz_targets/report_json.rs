#![no_main]

use libfuzzer_sys::fuzz_target;
use su3_outer::decompose::DecompositionReport;
use su3_outer::verify::{reports_from_json, VerificationReport};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = VerificationReport::from_json(s) {
            assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
        }
        let _ = reports_from_json(s);
        if let Ok(r) = DecompositionReport::from_json(s) {
            assert_eq!(DecompositionReport::from_json(&r.to_json()).unwrap(), r);
        }
    }
});
