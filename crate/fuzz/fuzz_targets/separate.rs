#![no_main]

use libfuzzer_sys::fuzz_target;
use psep::format::parse_graph;
use psep::oracle::verify_separator;
use psep::separate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(file) = parse_graph(text) else { return };
    let g = file.graph;
    if g.n() > 5_000 {
        return;
    }
    // A valid embedding must always separate, and the result must verify.
    let sep = separate(&g).expect("valid embeddings separate");
    let verdict = verify_separator(&g, &sep.faces, &sep.report);
    assert!(verdict.passed(), "{verdict}");
});
