#![no_main]

use libfuzzer_sys::fuzz_target;

use tecs::instance::{format_instance, parse_instance};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    // Parsing must never panic; accepted inputs must survive a
    // format/parse round trip unchanged.
    if let Ok((g, w)) = parse_instance(text) {
        let canonical = format_instance(&g, &w);
        let (g2, w2) = parse_instance(&canonical).expect("canonical form must parse");
        assert_eq!(g.edges(), g2.edges());
        assert_eq!(w, w2);
        assert_eq!(canonical, format_instance(&g2, &w2));
    }
});
