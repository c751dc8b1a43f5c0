#![no_main]

use libfuzzer_sys::fuzz_target;
use trilength::embedding::psi_closed_form;
use trilength::hstar::{is_proper, qr_decode, qr_encode};
use trilength::QrEncoding;

fuzz_target!(|data: &str| {
    let Ok(e) = data.parse::<QrEncoding>() else {
        return;
    };
    assert_eq!(e.to_string().parse::<QrEncoding>().unwrap(), e);
    let a = qr_decode(&e);
    assert_eq!(qr_encode(&a), e);
    let _ = is_proper(&e);
    // Overflow is reported, never a panic.
    let _ = psi_closed_form(&e);
});
