#![no_main]

use kordered::io::{decode_graph6, encode_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = decode_graph6(data) {
        assert!(g.validate());
        let again = decode_graph6(encode_graph6(&g).as_bytes()).expect("re-encoding decodes");
        assert_eq!(again, g);
    }
});
