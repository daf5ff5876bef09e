#![no_main]

use libfuzzer_sys::fuzz_target;
use su3_outer::fock::ExactMatrix;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(m) = ExactMatrix::from_json(s) {
            assert_eq!(ExactMatrix::from_json(&m.to_json()).unwrap(), m);
        }
    }
});
