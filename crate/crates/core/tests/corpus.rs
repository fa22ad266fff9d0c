//! Replays the checked-in fuzz seeds through the same entry points.

use std::path::PathBuf;

use desargues_core::group::{parse_cayley_json, verify_group};
use desargues_core::parse::{format_point, parse_model, parse_point};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            (name, String::from_utf8_lossy(&std::fs::read(&path).unwrap()).into_owned())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn point_seeds() {
    for (name, s) in seeds("parse_point") {
        let parsed = parse_point(&s);
        assert_eq!(parsed.is_ok(), name != "zero_denominator", "{name}");
        if let Ok((x, y)) = parsed {
            assert_eq!(parse_point(&format_point(&x, &y)).unwrap(), (x, y));
        }
    }
}

#[test]
fn model_seeds() {
    for (name, s) in seeds("parse_model") {
        match parse_model(&s) {
            Ok(spec) => assert_eq!(parse_model(&spec.to_string()).unwrap(), spec),
            Err(_) => assert_eq!(name, "overflow"),
        }
    }
}

#[test]
fn cayley_seeds() {
    for (name, s) in seeds("cayley_json") {
        let Ok(doc) = parse_cayley_json(&s) else {
            assert_eq!(name, "out_of_range.json");
            continue;
        };
        let v = verify_group(&doc.table);
        assert_eq!(v, doc.verdict, "{name}");
    }
}
