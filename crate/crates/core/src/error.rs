use std::path::PathBuf;

/// Errors produced by rank model construction, probability profiles,
/// sampling, and file I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("node count must be at least {min}, got {n}")]
    NodeCount { n: u64, min: u64 },

    #[error("invalid node pair ({u}, {v}) for n = {n}: require 0 <= u < v < n")]
    InvalidPair { u: u32, v: u32, n: u32 },

    #[error("cost for pair ({u}, {v}) is not finite ({value})")]
    NonFiniteCost { u: u32, v: u32, value: f64 },

    #[error("epsilon must lie in [0, 1], got {0}")]
    EpsilonOutOfRange(f64),

    #[error("expected edge count {m} is outside [0, {pair_count}]")]
    InfeasibleEdgeCount { m: f64, pair_count: usize },

    #[error("rank abscissa {x} is outside [0, {pair_count}]")]
    AbscissaOutOfRange { x: f64, pair_count: usize },

    #[error("rank model has {model_pairs} pairs but profile covers {profile_pairs}")]
    PairCountMismatch {
        model_pairs: usize,
        profile_pairs: usize,
    },

    #[error("positions matrix has {rows} rows, expected {expected}")]
    PositionRows { rows: usize, expected: u32 },

    #[error("positions row {row} has {cols} columns, expected {expected}")]
    PositionCols {
        row: usize,
        cols: usize,
        expected: usize,
    },

    #[error("position entry at row {row} is not finite")]
    NonFinitePosition { row: usize },

    #[error("haversine distance requires 2 coordinate columns (lon, lat), got {dim}")]
    HaversineDim { dim: usize },

    #[error("node {node} has no block affiliation")]
    MissingAffiliation { node: u32 },

    #[error("block count {block_count} is invalid for n = {n}")]
    BlockCount { block_count: u32, n: u32 },

    #[error("mean degree k must be even and satisfy 2 <= k < n, got k = {k}, n = {n}")]
    WattsStrogatzDegree { k: u32, n: u32 },

    #[error("perlin octaves must be at least 1")]
    PerlinOctaves,

    #[error("cost file is missing pair ({u}, {v})")]
    MissingPairCost { u: u32, v: u32 },

    #[error("run count must be at least 1")]
    RunCount,

    #[error("failed to parse {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
