#![no_main]

use desargues_core::parse::{format_point, parse_point};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok((x, y)) = parse_point(s) {
        let again = parse_point(&format_point(&x, &y)).expect("formatted point reparses");
        assert_eq!(again, (x, y));
    }
});
