#![no_main]

use kordered::io::parse_rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = parse_rational(s) {
            assert!(*r.denom() > 0 && *r.numer() >= 0);
        }
    }
});
