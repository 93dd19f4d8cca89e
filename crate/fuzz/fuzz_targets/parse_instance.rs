//! Instance text parser: must never panic, and anything it accepts must
//! survive a render and reparse unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use setpart::io::{parse_instance, serialize_instance, ModeChoice};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for mode in [ModeChoice::Auto, ModeChoice::Int, ModeChoice::Float] {
        if let Ok(instance) = parse_instance(text, mode) {
            let rendered = serialize_instance(&instance);
            let reparsed =
                parse_instance(&rendered, ModeChoice::Auto).expect("canonical text reparses");
            assert_eq!(reparsed, instance, "round trip drifted");
        }
    }
});
