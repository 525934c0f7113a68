#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(v) = smskit::parse::parse_vertex(text) {
            assert_eq!(smskit::parse::parse_vertex(&v.to_string()), Ok(v));
        }
    }
});
