#![no_main]

use desargues_core::group::{parse_cayley_json, verify_group};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(doc) = parse_cayley_json(s) {
        if doc.order <= 64 {
            let v = verify_group(&doc.table);
            if v.holds {
                assert!(v.latin_square.holds && v.identity.holds);
            }
        }
    }
});
