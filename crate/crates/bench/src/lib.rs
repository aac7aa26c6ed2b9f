//! Fixture graphs shared by the benchmarks.

use triclose::generators::{power_law_directed, PowerLawParams};
use triclose::DirectedGraph;

/// Heavy-tailed digraph with mean degree about 10.
pub fn fixture(n: usize) -> DirectedGraph {
    power_law_directed(PowerLawParams { n, mean_degree: 8.0, exponent: 2.5, ring: 2 }, 42)
}

pub const SIZES: [usize; 3] = [200, 1_000, 4_000];
