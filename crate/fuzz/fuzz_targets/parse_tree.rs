#![no_main]

use libfuzzer_sys::fuzz_target;
use psep::balanced_edge_cut;
use psep::format::{parse_tree, write_tree};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(tree) = parse_tree(text) else { return };
    assert_eq!(parse_tree(&write_tree(&tree)).expect("reparse"), tree);
    if let Ok(cut) = balanced_edge_cut(&tree) {
        assert!(cut.larger_side() <= tree.balance_bound());
    }
});
