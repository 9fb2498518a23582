//! Benchmark fixtures shared by the criterion harness.

use lllcolor_core::generate;
use lllcolor_core::Graph;

/// Random `d`-regular graph on `n` vertices with a fixed seed.
pub fn regular(n: usize, d: usize) -> Graph {
    generate::random_regular(n, d, 0xC0FFEE).expect("benchmark parameters are feasible")
}
