#![no_main]

use libfuzzer_sys::fuzz_target;
use trilength::realize::{emit_json, emit_svg, parse_drawing_json};

fuzz_target!(|data: &str| {
    let Ok((drawing, placement)) = parse_drawing_json(data) else {
        return;
    };
    let text = emit_json(&drawing, &placement);
    let (again, placement_again) = parse_drawing_json(&text).expect("emitted document parses");
    assert_eq!(again.points.len(), drawing.points.len());
    assert_eq!(again.edges, drawing.edges);
    assert_eq!(placement_again, placement);
    let _ = emit_svg(&drawing);
});
