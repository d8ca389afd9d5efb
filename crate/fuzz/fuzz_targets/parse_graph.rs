#![no_main]

use libfuzzer_sys::fuzz_target;
use psep::format::{parse_graph, write_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = parse_graph(text) else { return };
    // Anything accepted must survive a write/parse round trip.
    let again = parse_graph(&write_graph(&file.graph, file.coords.as_deref())).expect("reparse");
    assert_eq!(again.graph, file.graph);
});
