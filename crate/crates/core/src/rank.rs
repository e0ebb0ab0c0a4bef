//! Turning a per-pair cost function into a total order over node pairs.
//!
//! Ties are broken by a per-pair 64-bit key drawn from a counter-based RNG
//! keyed on `(tie_seed, u, v)`. Using a secondary sort key rather than a
//! perturbed cost means unequal costs can never be reordered, while
//! equal-cost pairs are permuted uniformly and reproducibly.

use crate::pair::{all_pairs, pair_count, NodePair};
use crate::{rng, Error, Result};

/// Sort direction for cost-derived ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ascending,
    Descending,
}

/// A total order over all `L = n(n-1)/2` undirected node pairs.
///
/// Ranks are 1-based: rank 1 is the pair most likely to be connected.
#[derive(Debug, Clone)]
pub struct RankModel {
    n: u32,
    tie_seed: u64,
    /// Pair at rank `r` sits at index `r - 1`.
    order: Vec<NodePair>,
    /// Upper-triangle pair index -> 1-based rank.
    inverse: Vec<u32>,
}

impl RankModel {
    /// Rank all pairs by `cost(u, v)`, direction per `direction`, ties broken
    /// by `tie_seed`. Fails on the first non-finite cost encountered.
    pub fn from_cost<F>(n: u32, direction: Direction, tie_seed: u64, cost: F) -> Result<Self>
    where
        F: Fn(u32, u32) -> f64,
    {
        if n < 2 {
            return Err(Error::NodeCount {
                n: n as u64,
                min: 2,
            });
        }
        let l = pair_count(n);
        assert!(l < u32::MAX as usize, "pair count exceeds u32 rank range");

        let mut keyed: Vec<(f64, u64, NodePair)> = Vec::with_capacity(l);
        for p in all_pairs(n) {
            let c = cost(p.u, p.v);
            if !c.is_finite() {
                return Err(Error::NonFiniteCost {
                    u: p.u,
                    v: p.v,
                    value: c,
                });
            }
            keyed.push((c, rng::pair_key(tie_seed, p.u, p.v), p));
        }
        keyed.sort_unstable_by(|a, b| {
            let by_cost = match direction {
                Direction::Ascending => a.0.partial_cmp(&b.0).unwrap(),
                Direction::Descending => b.0.partial_cmp(&a.0).unwrap(),
            };
            by_cost.then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2))
        });

        let order: Vec<NodePair> = keyed.into_iter().map(|(_, _, p)| p).collect();
        let mut inverse = vec![0u32; l];
        for (i, p) in order.iter().enumerate() {
            inverse[p.index(n)] = i as u32 + 1;
        }
        Ok(RankModel {
            n,
            tie_seed,
            order,
            inverse,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn tie_seed(&self) -> u64 {
        self.tie_seed
    }

    /// Number of pairs `L`.
    pub fn pair_count(&self) -> usize {
        self.order.len()
    }

    /// Pairs in rank order; index `r - 1` holds the pair at rank `r`.
    pub fn pairs_by_rank(&self) -> &[NodePair] {
        &self.order
    }

    /// Pair at 1-based rank `r`.
    pub fn pair_at(&self, rank: usize) -> Option<NodePair> {
        if rank == 0 {
            return None;
        }
        self.order.get(rank - 1).copied()
    }

    /// 1-based rank of a pair; inverse of [`RankModel::pair_at`].
    pub fn rank_of(&self, pair: NodePair) -> Result<usize> {
        if pair.u >= pair.v || pair.v >= self.n {
            return Err(Error::InvalidPair {
                u: pair.u,
                v: pair.v,
                n: self.n,
            });
        }
        Ok(self.inverse[pair.index(self.n)] as usize)
    }

    /// Symmetric `n x n` matrix of ranks; the diagonal holds the sentinel 0.
    pub fn rank_matrix(&self) -> RankMatrix {
        let n = self.n as usize;
        let mut data = vec![0u32; n * n];
        for (i, p) in self.order.iter().enumerate() {
            let r = i as u32 + 1;
            data[p.u as usize * n + p.v as usize] = r;
            data[p.v as usize * n + p.u as usize] = r;
        }
        RankMatrix { n: self.n, data }
    }
}

/// Dense symmetric matrix of 1-based ranks with 0 on the diagonal.
pub struct RankMatrix {
    n: u32,
    data: Vec<u32>,
}

impl RankMatrix {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, u: u32, v: u32) -> u32 {
        self.data[u as usize * self.n as usize + v as usize]
    }

    /// 8-bit grayscale pixels, row-major: lower rank maps to darker values
    /// (rank 1 -> 0, rank L -> 255); the diagonal renders white.
    pub fn to_pixels(&self) -> Vec<u8> {
        let l = pair_count(self.n) as f64;
        self.data
            .iter()
            .map(|&r| {
                if r == 0 {
                    255
                } else if l <= 1.0 {
                    0
                } else {
                    ((r - 1) as f64 / (l - 1.0) * 255.0).round() as u8
                }
            })
            .collect()
    }
}
