#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // format sniffing plus either decoder
    if let Ok(g) = kordered::io::decode_graph(data) {
        assert!(g.validate());
    }
});
