//! Drawing graphs from a rank model and a probability profile.
//!
//! Each pair is included independently with the probability of its rank. The
//! Bernoulli draw for pair `(u, v)` depends only on `(sample_seed, u, v)`, so
//! the result is independent of evaluation order and identical across runs
//! with the same seed.

use crate::graph::Graph;
use crate::pair::NodePair;
use crate::profile::ProbabilityProfile;
use crate::rank::RankModel;
use crate::{rng, Error, Result};

/// A random graph model: a structure, an edge-probability profile over its
/// ranks, and the seed for the per-pair draws.
pub struct GeneratorSpec<'a> {
    pub model: &'a RankModel,
    pub profile: &'a ProbabilityProfile,
    pub sample_seed: u64,
}

/// Draw one graph from the model.
pub fn generate(spec: &GeneratorSpec<'_>) -> Result<Graph> {
    if spec.model.pair_count() != spec.profile.pair_count() {
        return Err(Error::PairCountMismatch {
            model_pairs: spec.model.pair_count(),
            profile_pairs: spec.profile.pair_count(),
        });
    }
    let probs = spec.profile.probabilities();
    let mut edges: Vec<NodePair> = Vec::with_capacity(spec.profile.target_edges() as usize + 16);
    for (idx, pair) in spec.model.pairs_by_rank().iter().enumerate() {
        // pair_unit is in [0, 1), so p = 1 always includes and p = 0 never.
        if rng::pair_unit(spec.sample_seed, pair.u, pair.v) < probs[idx] {
            edges.push(*pair);
        }
    }
    Graph::new(spec.model.n(), edges)
}

/// Draw `count` independent graphs, with per-run seeds derived from
/// `seed_stream`. Deterministic given the stream seed.
pub fn generate_batch(
    model: &RankModel,
    profile: &ProbabilityProfile,
    count: usize,
    seed_stream: u64,
) -> Result<Vec<Graph>> {
    if count < 1 {
        return Err(Error::RunCount);
    }
    (0..count)
        .map(|i| {
            generate(&GeneratorSpec {
                model,
                profile,
                sample_seed: rng::derive(seed_stream, i as u64),
            })
        })
        .collect()
}
