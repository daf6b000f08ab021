#![no_main]

use bellrec::parse::{parse_list, parse_value};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(items) = parse_list(text) {
        // Printing and re-parsing is the identity.
        for item in items {
            assert_eq!(parse_value(&item.to_string()).unwrap(), item);
        }
    }
});
