#![no_main]

use libfuzzer_sys::fuzz_target;
use trilength::BiPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(p) = serde_json::from_slice::<BiPoly>(data) else {
        return;
    };
    assert_eq!(BiPoly::from_triples(&p.to_triples()).unwrap(), p);
    let text = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<BiPoly>(&text).unwrap(), p);
    let _ = p.checked_add(&p);
    let _ = p.eval(0.5, 1.5);
});
