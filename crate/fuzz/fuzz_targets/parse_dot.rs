#![no_main]

use libfuzzer_sys::fuzz_target;
use smskit::export::parse_dot;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = parse_dot(text) {
            assert_eq!(parse_dot(&g.to_dot()), Ok(g));
        }
    }
});
