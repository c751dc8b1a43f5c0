#![no_main]

use libfuzzer_sys::fuzz_target;
use trilength::hstar::{qr_decode, qr_encode, ty};
use trilength::Address;

fuzz_target!(|data: &str| {
    let Ok(a) = data.parse::<Address>() else {
        return;
    };
    assert_eq!(a.to_string().parse::<Address>().unwrap(), a);
    let e = qr_encode(&a);
    assert_eq!(qr_decode(&e), a);
    assert!(ty(&a) <= 1);
});
