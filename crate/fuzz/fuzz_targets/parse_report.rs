#![no_main]

use libfuzzer_sys::fuzz_target;
use psep::report::{from_json, to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(report) = from_json(text) {
        assert_eq!(from_json(&to_json(&report)).expect("reparse"), report);
    }
});
