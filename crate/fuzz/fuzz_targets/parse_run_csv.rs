#![no_main]

use libfuzzer_sys::fuzz_target;

use tecs_cli::records::{parse_records, records_to_string};
use tecs_cli::report::{aggregate, auto_group};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_records(text) {
        // Serialization round trip and aggregation must not panic on any
        // records that deserialized successfully.
        if records.iter().all(|r| r.seconds.is_finite()) {
            let again = records_to_string(&records).expect("serializable");
            let records2 = parse_records(&again).expect("round trip parses");
            assert_eq!(records.len(), records2.len());
            if !records.is_empty() {
                let _ = aggregate(&records, auto_group(&records));
            }
        }
    }
});
