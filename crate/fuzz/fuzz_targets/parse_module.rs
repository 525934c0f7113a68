#![no_main]

use libfuzzer_sys::fuzz_target;
use smskit::NakayamaAlgebra;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let alg = NakayamaAlgebra::new(4, 3).unwrap();
    if let Ok(x) = smskit::parse::parse_module(text) {
        if let Ok(v) = alg.to_vertex(x) {
            assert_eq!(alg.from_vertex(v), Ok(x));
        }
    }
    if let Ok(x) = smskit::parse::parse_stacked(text, &alg) {
        assert!((1..=4).contains(&x.socle));
    }
});
