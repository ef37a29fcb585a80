#![no_main]

use kordered::io::{decode_edge_list, encode_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = decode_edge_list(data) {
        assert!(g.validate());
        assert_eq!(decode_edge_list(encode_edge_list(&g).as_bytes()).unwrap(), g);
    }
});
