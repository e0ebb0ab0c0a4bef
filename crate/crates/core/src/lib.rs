//! Random graph generation from node-pair rank structures.
//!
//! A structure is a total order over all undirected node pairs, built by
//! sorting an arbitrary per-pair cost function ([`RankModel`]). A rank
//! probability profile ([`ProbabilityProfile`]) maps a target edge count `m`
//! and a randomness parameter `epsilon` in `[0, 1]` to one edge probability
//! per rank, via a rational Bézier interpolation between a hard step
//! (`epsilon = 0`, the graph is fully determined by the structure) and the
//! uniform Erdős–Rényi profile (`epsilon = 1`). Graphs are then drawn by
//! independent Bernoulli trials per pair ([`sampler`]).
//!
//! The [`zoo`] module ships a catalog of ready-made structures (spatial,
//! blocks, cliques, nested, star, core-periphery, Perlin noise, fractal
//! trees, Watts-Strogatz rings) and [`metrics`] provides the small-world
//! profiling machinery (clustering coefficient, largest component, scaled
//! short-path score).

pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod pair;
pub mod profile;
pub mod rank;
pub mod rng;
pub mod sampler;
pub mod zoo;

pub use error::Error;
pub use graph::Graph;
pub use pair::NodePair;
pub use profile::ProbabilityProfile;
pub use rank::RankModel;

pub type Result<T> = std::result::Result<T, Error>;
