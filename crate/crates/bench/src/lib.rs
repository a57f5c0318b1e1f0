//! Shared inputs for the benchmarks.

use rmf_core::TopType;

/// Types whose graph enumeration is benchmarked, from trivial to a few
/// hundred graphs.
pub fn enumeration_inputs() -> Vec<TopType> {
    [
        "1,3,0|1",
        "2,4,0|",
        "2,5,0|1",
        "2,6,0|1,1",
        "3,6,0|1,1",
        "1,6,1|-1,1",
        "3,5,1|1,2",
        "3,7,1|-1,2",
    ]
    .iter()
    .map(|s| s.parse().expect("valid type"))
    .collect()
}
