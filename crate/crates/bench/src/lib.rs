//! Shared fixtures for the pipeline benchmarks.

use rankgraph::rank::RankModel;
use rankgraph::zoo;

pub const BENCH_N: u32 = 512;
pub const BENCH_M: f64 = 2048.0;

pub fn bench_model() -> RankModel {
    zoo::nested(BENCH_N, 7).unwrap()
}
