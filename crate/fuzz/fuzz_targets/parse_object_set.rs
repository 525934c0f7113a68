#![no_main]

use libfuzzer_sys::fuzz_target;
use smskit::{validate_type, Family};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for rfs in [
        validate_type(Family::A, 3, 4, 3, 1).unwrap(),
        validate_type(Family::D, 4, 1, 1, 3).unwrap(),
    ] {
        if let Ok(set) = smskit::parse::parse_object_set(text, &rfs) {
            for v in &set {
                assert!(rfs.is_canonical(*v));
            }
        }
    }
});
