//! Assignment JSON parser: must never panic, and whatever it extracts must
//! agree with the partition builder about which side labels are valid.

#![no_main]

use libfuzzer_sys::fuzz_target;
use setpart::io::parse_assignment;
use setpart::{Instance, Partition};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(sides) = parse_assignment(text) else { return };
    if sides.is_empty() {
        return;
    }
    let instance = Instance::new(vec![1i128; sides.len()]).expect("all-ones instance is valid");
    let all_labeled = sides.iter().all(|&s| s == 1 || s == 2);
    assert_eq!(
        Partition::from_raw(&instance, &sides).is_ok(),
        all_labeled,
        "partition builder disagreed on side labels"
    );
});
