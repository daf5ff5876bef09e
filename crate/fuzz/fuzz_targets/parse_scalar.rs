#![no_main]

use libfuzzer_sys::fuzz_target;
use su3_outer::Scalar;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = s.parse::<Scalar>() {
            // Display output parses back to the same value.
            assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
});
