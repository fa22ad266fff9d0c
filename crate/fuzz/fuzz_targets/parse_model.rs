#![no_main]

use desargues_core::models::FinitePlane;
use desargues_core::parse::{parse_model, ModelSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_model(s) {
        assert_eq!(parse_model(&spec.to_string()).expect("display reparses"), spec);
        if let ModelSpec::Finite(p) = spec {
            // small orders only: construction cost grows with p^2
            if p <= 31 {
                let _ = FinitePlane::new(p);
            }
        }
    }
});
