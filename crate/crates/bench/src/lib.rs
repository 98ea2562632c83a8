//! Fixture graphs shared by the criterion benchmarks.

use forcing_core::{enumerate_connected, families, Graph};

/// Named graphs whose forcing numbers are cheap enough to benchmark per
/// iteration.
pub fn fixtures() -> Vec<Graph> {
    vec![
        families::petersen(),
        families::cycle(16).expect("valid"),
        families::complete_bipartite(5, 5).expect("valid"),
        families::complete(9).expect("valid"),
        families::path(20).expect("valid"),
    ]
}

/// All connected graphs on `n` vertices.
pub fn connected(n: usize) -> Vec<Graph> {
    enumerate_connected(n).expect("order within the enumerator's range")
}
