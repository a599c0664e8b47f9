//! Shared fixtures for the benchmarks.

use ptwreath::{build_named_generators, WreathElement};

pub const FIVE_SET: [&str; 5] = ["x1", "x2", "tau", "tauB", "sigma"];

/// The rank-5 generating set of the wreath product, by name.
pub fn five_set(n: usize, m: usize) -> Vec<WreathElement> {
    let alpha = build_named_generators(n, m).expect("n, m >= 2");
    FIVE_SET
        .iter()
        .map(|s| alpha.get(s).expect("bound").clone())
        .collect()
}
