//! The structure zoo: ready-made cost functions, each returning a
//! [`RankModel`].
//!
//! Node indices are 0-based everywhere. Structures whose published form uses
//! 1-based consecutive indices (nested, star) are evaluated on the 0-based
//! indices directly; the constant offset shifts every cost equally and never
//! changes the order.

pub mod perlin;
pub mod tree;

use crate::pair::pair_count;
use crate::rank::{Direction, RankModel};
use crate::rng::{self, SplitMix};
use crate::{Error, Result};

use perlin::Perlin2;
use tree::{leaf_distance, leaf_tree_depth, HeapTree};

/// Seed-derivation tags so structure randomness (positions, noise tables)
/// and rank tie-breaking never share a stream.
const TAG_TIE: u64 = 1;
const TAG_STRUCTURE: u64 = 2;

fn tie_seed(seed: u64) -> u64 {
    rng::derive(seed, TAG_TIE)
}

fn structure_seed(seed: u64) -> u64 {
    rng::derive(seed, TAG_STRUCTURE)
}

/// Distance used by the spatial structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    #[default]
    Euclidean,
    /// Great-circle distance on the unit sphere; positions are (lon, lat)
    /// in degrees.
    Haversine,
}

impl Metric {
    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Metric::Euclidean => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            Metric::Haversine => {
                let to_rad = std::f64::consts::PI / 180.0;
                let (lon1, lat1) = (a[0] * to_rad, a[1] * to_rad);
                let (lon2, lat2) = (b[0] * to_rad, b[1] * to_rad);
                let dlat = lat2 - lat1;
                let dlon = lon2 - lon1;
                let h = (dlat / 2.0).sin().powi(2)
                    + lat1.cos() * lat2.cos() * (dlon / 2.0).sin().powi(2);
                2.0 * h.sqrt().asin()
            }
        }
    }
}

/// Latent positions: one row per node, `dim` columns.
#[derive(Debug, Clone)]
pub struct Positions {
    rows: Vec<Vec<f64>>,
}

impl Positions {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let dim = rows.first().map(|r| r.len()).unwrap_or(0);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::PositionCols {
                    row: i,
                    cols: row.len(),
                    expected: dim,
                });
            }
            if row.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFinitePosition { row: i });
            }
        }
        Ok(Positions { rows })
    }

    /// Uniform positions in `[0, 1]^dim`.
    pub fn uniform(n: u32, dim: usize, seed: u64) -> Self {
        let mut rng = SplitMix::new(seed);
        let rows = (0..n)
            .map(|_| (0..dim).map(|_| rng.next_unit()).collect())
            .collect();
        Positions { rows }
    }

    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn row(&self, i: u32) -> &[f64] {
        &self.rows[i as usize]
    }

    fn check(&self, n: u32, metric: Metric) -> Result<()> {
        if self.node_count() != n as usize {
            return Err(Error::PositionRows {
                rows: self.node_count(),
                expected: n,
            });
        }
        if metric == Metric::Haversine && self.dim() != 2 {
            return Err(Error::HaversineDim { dim: self.dim() });
        }
        Ok(())
    }

    /// Sort rows by a per-row key; used so matrix plots of generated
    /// positions show their band/corner structure.
    fn sorted_by_key<F: Fn(&[f64]) -> f64>(mut self, key: F) -> Self {
        self.rows
            .sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        self
    }
}

fn resolve_positions(
    n: u32,
    dim: usize,
    positions: Option<Positions>,
    metric: Metric,
    seed: u64,
    sort_key: impl Fn(&[f64]) -> f64,
) -> Result<Positions> {
    let pos = match positions {
        Some(p) => p,
        // Generated positions get sorted by the latent value so rank-matrix
        // exports reproduce the published layouts; relabeling nodes does not
        // change the generated graph distribution.
        None => Positions::uniform(n, dim, structure_seed(seed)).sorted_by_key(sort_key),
    };
    pos.check(n, metric)?;
    Ok(pos)
}

/// Spatial structure: rank pairs by ascending distance between latent
/// positions. Without explicit positions, nodes get uniform coordinates in
/// `[0, 1]^dim`.
pub fn spatial(
    n: u32,
    dim: usize,
    positions: Option<Positions>,
    metric: Metric,
    seed: u64,
) -> Result<RankModel> {
    let pos = resolve_positions(n, dim, positions, metric, seed, |r| r[0])?;
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        metric.distance(pos.row(u), pos.row(v))
    })
}

/// Soft core-periphery: cost is the product of the pair distance and both
/// nodes' distances to the center (the zero vector by default, i.e. a corner
/// of the sampling cube).
pub fn core_periphery(
    n: u32,
    dim: usize,
    positions: Option<Positions>,
    metric: Metric,
    center: Option<Vec<f64>>,
    seed: u64,
) -> Result<RankModel> {
    let center = center.unwrap_or_else(|| vec![0.0; dim]);
    let center_key = center.clone();
    let metric_key = metric;
    let pos = resolve_positions(n, dim, positions, metric, seed, move |r| {
        metric_key.distance(r, &center_key)
    })?;
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        metric.distance(pos.row(u), pos.row(v))
            * metric.distance(pos.row(u), &center)
            * metric.distance(pos.row(v), &center)
    })
}

/// `n` nodes split into `block_count` equal consecutive blocks.
pub fn equal_blocks(n: u32, block_count: u32) -> Result<Vec<u64>> {
    if block_count == 0 || block_count > n {
        return Err(Error::BlockCount { block_count, n });
    }
    let size = (n as u64).div_ceil(block_count as u64);
    Ok((0..n as u64).map(|i| i / size).collect())
}

/// Assortative blocks: intra-block pairs rank strictly before inter-block
/// pairs; order within each class is uniform by the tie seed.
pub fn blocks_assortative(n: u32, membership: &[u64], seed: u64) -> Result<RankModel> {
    if membership.len() != n as usize {
        return Err(Error::MissingAffiliation {
            node: membership.len().min(n as usize - 1) as u32,
        });
    }
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        if membership[u as usize] == membership[v as usize] {
            0.0
        } else {
            1.0
        }
    })
}

/// Ring layout for overlapping blocks: `block_count` communities of size
/// `2h` with stride `h = n / block_count`, wrapping around, so every node
/// belongs to exactly two communities and each community shares half its
/// members with each neighbor.
pub fn overlapping_ring_membership(n: u32, block_count: u32) -> Result<Vec<Vec<u64>>> {
    if block_count < 2 || n / block_count == 0 {
        return Err(Error::BlockCount { block_count, n });
    }
    let stride = n / block_count;
    let mut memberships: Vec<Vec<u64>> = vec![Vec::new(); n as usize];
    for c in 0..block_count {
        for j in 0..2 * stride {
            let node = (c * stride + j) % n;
            memberships[node as usize].push(c as u64);
        }
    }
    Ok(memberships)
}

/// Overlapping assortative blocks from explicit per-node block sets: pairs
/// sharing at least one block rank first.
pub fn blocks_from_sets(n: u32, memberships: &[Vec<u64>], seed: u64) -> Result<RankModel> {
    if memberships.len() != n as usize {
        return Err(Error::MissingAffiliation {
            node: memberships.len().min(n as usize - 1) as u32,
        });
    }
    if let Some(node) = memberships.iter().position(|m| m.is_empty()) {
        return Err(Error::MissingAffiliation { node: node as u32 });
    }
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        let a = &memberships[u as usize];
        let b = &memberships[v as usize];
        if a.iter().any(|x| b.contains(x)) {
            0.0
        } else {
            1.0
        }
    })
}

/// Overlapping blocks on the ring layout of `overlapping_ring_membership`.
pub fn blocks_overlapping(n: u32, block_count: u32, seed: u64) -> Result<RankModel> {
    let memberships = overlapping_ring_membership(n, block_count)?;
    blocks_from_sets(n, &memberships, seed)
}

/// Clique sizing for the disconnected-cliques structure: with mean degree
/// `2m/n`, cliques of size `ceil(2m/n) + 1` absorb about `m` edges; leftover
/// nodes form one remainder community.
pub fn clique_partition(n: u32, m: f64) -> Result<Vec<u64>> {
    if !(0.0..=pair_count(n) as f64).contains(&m) {
        return Err(Error::InfeasibleEdgeCount {
            m,
            pair_count: pair_count(n),
        });
    }
    let mean_degree = 2.0 * m / n as f64;
    let clique_size = (mean_degree.ceil() as u64 + 1).max(2);
    if clique_size >= n as u64 {
        // Degenerate: a single block covering all nodes.
        return Ok(vec![0; n as usize]);
    }
    let cliques = n as u64 / clique_size;
    Ok((0..n as u64)
        .map(|i| (i / clique_size).min(cliques))
        .collect())
}

/// Densest possible disconnected subgraphs at `epsilon = 0`: equal cliques
/// sized from the average degree, plus a remainder community, run through
/// the assortative block structure.
pub fn disconnected_cliques(n: u32, m: f64, seed: u64) -> Result<RankModel> {
    let blocks = clique_partition(n, m)?;
    blocks_assortative(n, &blocks, seed)
}

/// Nested structure: cost `u + v`; low-index nodes' neighborhoods contain
/// high-index nodes' neighborhoods.
pub fn nested(n: u32, seed: u64) -> Result<RankModel> {
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        (u + v) as f64
    })
}

/// Star structure: cost `u * n + v`, ranking first every pair containing
/// node 0, then node 1, and so on. Injective for `u < v < n`, so no ties.
pub fn star(n: u32, seed: u64) -> Result<RankModel> {
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        u as f64 * n as f64 + v as f64
    })
}

/// Perlin-noise structure: cost is the noise intensity at pixel `(u, v)` of
/// an `n x n` image, fBm-summed over `octaves` with base frequency 4 periods
/// across the axis.
pub const PERLIN_BASE_PERIODS: f64 = 4.0;

pub fn perlin(n: u32, octaves: u32, seed: u64) -> Result<RankModel> {
    if octaves < 1 {
        return Err(Error::PerlinOctaves);
    }
    let field = Perlin2::new(structure_seed(seed));
    let scale = PERLIN_BASE_PERIODS / n as f64;
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        field.fbm(u as f64 * scale, v as f64 * scale, octaves)
    })
}

/// Fractal leaves: nodes sit on the leftmost `n` leaves of the smallest
/// complete binary tree with at least `n` leaves; cost is the tree distance
/// between leaves.
pub fn fractal_leaves(n: u32, seed: u64) -> Result<RankModel> {
    let _ = leaf_tree_depth(n);
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        leaf_distance(u, v) as f64
    })
}

/// Fractal root: nodes fill a complete binary tree of size `n` in heap
/// order; cost is the geodesic tree distance.
pub fn fractal_root(n: u32, seed: u64) -> Result<RankModel> {
    let t = HeapTree::new(n, 2);
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        t.distance(u, v) as f64
    })
}

/// Fractal hierarchy: a complete ternary tree scored so that root-to-leaf
/// pairs rank first (descendant score D) and sibling leaves follow closely
/// (sibling score S), producing high-degree low-clustering hubs above
/// low-degree high-clustering leaves.
pub fn fractal_hierarchy(n: u32, seed: u64) -> Result<RankModel> {
    let t = HeapTree::new(n, 3);
    let total_height = t.max_depth();
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        let (hu, hv) = (t.height(u), t.height(v));
        if t.related(u, v) {
            // D: min(h_u, h_v) + h(T) - max(h_u, h_v); zero between the root
            // and the deepest leaves.
            (hu.min(hv) + total_height - hu.max(hv)) as f64
        } else if hu == hv {
            (t.distance(u, v) as f64 - 2.0) + hu as f64
        } else {
            (t.distance(u, v) + total_height) as f64
        }
    })
}

/// Watts-Strogatz two-level cost, exactly as published:
/// `0 if (v - u) mod (n - k/2) < k/2, else 1`, for `u < v` and 0-based
/// indices. Note the modulus makes the neighborhood slightly asymmetric and
/// yields fewer than `n k / 2` zero-cost pairs; see
/// [`watts_strogatz_ring`] for the standard ring lattice.
pub fn watts_strogatz_rank(n: u32, k: u32, seed: u64) -> Result<RankModel> {
    check_ws_degree(n, k)?;
    let modulus = (n - k / 2) as u64;
    let half = (k / 2) as u64;
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        if ((v - u) as u64) % modulus < half {
            0.0
        } else {
            1.0
        }
    })
}

/// Standard ring-lattice variant: zero cost exactly when the circular
/// distance is at most `k/2`, which gives exactly `n k / 2` zero-cost pairs
/// (for `k < n - 1`), so `epsilon = 0` with `m = n k / 2` reproduces the
/// regular lattice deterministically.
pub fn watts_strogatz_ring(n: u32, k: u32, seed: u64) -> Result<RankModel> {
    check_ws_degree(n, k)?;
    let half = k / 2;
    RankModel::from_cost(n, Direction::Ascending, tie_seed(seed), |u, v| {
        let d = v - u;
        let circ = d.min(n - d);
        if circ <= half {
            0.0
        } else {
            1.0
        }
    })
}

fn check_ws_degree(n: u32, k: u32) -> Result<()> {
    if k % 2 != 0 || k < 2 || k >= n {
        return Err(Error::WattsStrogatzDegree { k, n });
    }
    Ok(())
}

/// A named structure from the catalog, with its parameters resolved.
#[derive(Debug, Clone)]
pub enum ZooSpec {
    Spatial {
        dim: usize,
        positions: Option<Positions>,
        metric: Metric,
    },
    BlocksAssortative {
        blocks: u32,
    },
    BlocksOverlapping {
        blocks: u32,
    },
    DisconnectedCliques {
        m: f64,
    },
    Nested,
    Star,
    CorePeriphery {
        dim: usize,
        positions: Option<Positions>,
        metric: Metric,
    },
    Perlin {
        octaves: u32,
    },
    FractalLeaves,
    FractalRoot,
    FractalHierarchy,
    WattsStrogatz {
        k: u32,
        ring: bool,
    },
}

impl ZooSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ZooSpec::Spatial { .. } => "spatial",
            ZooSpec::BlocksAssortative { .. } => "blocks-assortative",
            ZooSpec::BlocksOverlapping { .. } => "blocks-overlapping",
            ZooSpec::DisconnectedCliques { .. } => "cliques",
            ZooSpec::Nested => "nested",
            ZooSpec::Star => "star",
            ZooSpec::CorePeriphery { .. } => "core-periphery",
            ZooSpec::Perlin { .. } => "perlin",
            ZooSpec::FractalLeaves => "fractal-leaves",
            ZooSpec::FractalRoot => "fractal-root",
            ZooSpec::FractalHierarchy => "fractal-hierarchy",
            ZooSpec::WattsStrogatz { .. } => "watts-strogatz",
        }
    }

    pub fn build(&self, n: u32, seed: u64) -> Result<RankModel> {
        match self {
            ZooSpec::Spatial {
                dim,
                positions,
                metric,
            } => spatial(n, *dim, positions.clone(), *metric, seed),
            ZooSpec::BlocksAssortative { blocks } => {
                blocks_assortative(n, &equal_blocks(n, *blocks)?, seed)
            }
            ZooSpec::BlocksOverlapping { blocks } => blocks_overlapping(n, *blocks, seed),
            ZooSpec::DisconnectedCliques { m } => disconnected_cliques(n, *m, seed),
            ZooSpec::Nested => nested(n, seed),
            ZooSpec::Star => star(n, seed),
            ZooSpec::CorePeriphery {
                dim,
                positions,
                metric,
            } => core_periphery(n, *dim, positions.clone(), *metric, None, seed),
            ZooSpec::Perlin { octaves } => perlin(n, *octaves, seed),
            ZooSpec::FractalLeaves => fractal_leaves(n, seed),
            ZooSpec::FractalRoot => fractal_root(n, seed),
            ZooSpec::FractalHierarchy => fractal_hierarchy(n, seed),
            ZooSpec::WattsStrogatz { k, ring } => {
                if *ring {
                    watts_strogatz_ring(n, *k, seed)
                } else {
                    watts_strogatz_rank(n, *k, seed)
                }
            }
        }
    }
}

/// Names accepted by the CLI's `--structure` flag.
pub fn zoo_names() -> Vec<&'static str> {
    vec![
        "spatial",
        "blocks-assortative",
        "blocks-overlapping",
        "cliques",
        "nested",
        "star",
        "core-periphery",
        "perlin",
        "fractal-leaves",
        "fractal-root",
        "fractal-hierarchy",
        "watts-strogatz",
    ]
}

/// The full catalog with default parameters, for gallery exports and
/// whole-zoo profile sweeps. `m` feeds the clique sizing and the
/// Watts-Strogatz mean degree `k = 2m/n` (rounded down to even).
pub fn gallery(n: u32, m: f64) -> Vec<ZooSpec> {
    let k = ((2.0 * m / n as f64) as u32 / 2 * 2).max(2);
    vec![
        ZooSpec::Spatial {
            dim: 2,
            positions: None,
            metric: Metric::Euclidean,
        },
        ZooSpec::BlocksAssortative { blocks: 4 },
        ZooSpec::BlocksOverlapping { blocks: 4 },
        ZooSpec::DisconnectedCliques { m },
        ZooSpec::Nested,
        ZooSpec::Star,
        ZooSpec::CorePeriphery {
            dim: 2,
            positions: None,
            metric: Metric::Euclidean,
        },
        ZooSpec::Perlin { octaves: 1 },
        ZooSpec::FractalLeaves,
        ZooSpec::FractalRoot,
        ZooSpec::FractalHierarchy,
        ZooSpec::WattsStrogatz { k, ring: true },
    ]
}
