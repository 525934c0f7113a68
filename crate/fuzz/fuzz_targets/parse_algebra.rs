#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rfs) = smskit::parse::parse_algebra(text) {
            assert!(rfs.r() > 0);
            assert!(rfs.simple_count() > 0);
        }
    }
});
