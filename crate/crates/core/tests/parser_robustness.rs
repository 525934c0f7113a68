use std::path::Path;

use proptest::prelude::*;
use smskit::export::parse_dot;
use smskit::parse::{parse_algebra, parse_module, parse_object_set, parse_stacked, parse_vertex};
use smskit::{validate_type, Family, NakayamaAlgebra};

fn exercise(target: &str, text: &str) {
    match target {
        "parse_algebra" => {
            let _ = parse_algebra(text);
        }
        "parse_vertex" => {
            if let Ok(v) = parse_vertex(text) {
                assert_eq!(parse_vertex(&v.to_string()), Ok(v));
            }
        }
        "parse_object_set" => {
            for rfs in [
                validate_type(Family::A, 3, 4, 3, 1).unwrap(),
                validate_type(Family::D, 4, 1, 1, 3).unwrap(),
            ] {
                if let Ok(set) = parse_object_set(text, &rfs) {
                    assert!(set.iter().all(|v| rfs.is_canonical(*v)));
                }
            }
        }
        "parse_module" => {
            let alg = NakayamaAlgebra::new(4, 3).unwrap();
            if let Ok(x) = parse_module(text) {
                if let Ok(v) = alg.to_vertex(x) {
                    assert_eq!(alg.from_vertex(v), Ok(x));
                }
            }
            let _ = parse_stacked(text, &alg);
        }
        "parse_dot" => {
            if let Ok(g) = parse_dot(text) {
                assert_eq!(parse_dot(&g.to_dot()), Ok(g));
            }
        }
        other => panic!("unknown target {other}"),
    }
}

const TARGETS: [&str; 5] = ["parse_algebra", "parse_vertex", "parse_object_set", "parse_module", "parse_dot"];

#[test]
fn checked_in_seeds_replay() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seeds = 0;
    for target in TARGETS {
        for entry in std::fs::read_dir(root.join(target)).unwrap() {
            let bytes = std::fs::read(entry.unwrap().path()).unwrap();
            exercise(target, &String::from_utf8_lossy(&bytes));
            seeds += 1;
        }
    }
    assert!(seeds >= TARGETS.len());
}

proptest! {
    #[test]
    fn parsers_never_panic(text in "[-+(){},/ X_0-9a-z\"\\[\\]=;>\n{}:.]{0,64}", k in 0usize..5) {
        exercise(TARGETS[k], &text);
    }
}
