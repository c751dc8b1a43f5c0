#![no_main]

use libfuzzer_sys::fuzz_target;
use trilength::graph::parse_labeled_graph;
use trilength::parse_graph;

fuzz_target!(|data: &str| {
    let Ok(lg) = parse_labeled_graph(data) else {
        return;
    };
    // The edge-list rendering reparses to the same graph.
    let again = parse_graph(&lg.graph.to_string()).expect("rendered graph parses");
    assert_eq!(again, lg.graph);
    if let Some(labels) = &lg.labels {
        assert_eq!(labels.len(), lg.graph.vertex_count());
    }
});
