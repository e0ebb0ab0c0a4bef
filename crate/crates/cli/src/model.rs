//! Building a rank model from resolved options: zoo structures by name,
//! plus `custom` costs loaded from CSV.

use std::path::PathBuf;

use rankgraph::io::{read_affiliations_csv, read_pair_costs_csv, read_positions_csv};
use rankgraph::rank::{Direction, RankModel};
use rankgraph::zoo::{self, Metric, Positions};

use crate::config::{validation, CliResult};

#[derive(Debug, Clone)]
pub struct StructureParams {
    pub name: String,
    pub n: u32,
    /// Resolved edge target; cliques size themselves from it.
    pub m: f64,
    /// Mean degree, only meaningful for watts-strogatz.
    pub k: Option<f64>,
    pub dim: usize,
    pub blocks: u32,
    pub octaves: u32,
    pub metric: Metric,
    pub ws_ring: bool,
    pub positions: Option<PathBuf>,
    pub affiliations: Option<PathBuf>,
    pub costs: Option<PathBuf>,
    pub seed: u64,
}

pub fn parse_metric(name: &str) -> CliResult<Metric> {
    match name {
        "euclidean" => Ok(Metric::Euclidean),
        "haversine" => Ok(Metric::Haversine),
        other => Err(validation(format!(
            "unknown metric {other:?}; choose euclidean or haversine"
        ))),
    }
}

fn load_positions(p: &StructureParams) -> CliResult<Option<Positions>> {
    match &p.positions {
        Some(path) => Ok(Some(read_positions_csv(path)?)),
        None => Ok(None),
    }
}

fn ws_k(p: &StructureParams) -> CliResult<u32> {
    let k =
        p.k.ok_or_else(|| validation("watts-strogatz requires the --k density specifier"))?;
    if k.fract() != 0.0 || k <= 0.0 {
        return Err(validation(format!(
            "watts-strogatz --k must be a positive even integer, got {k}"
        )));
    }
    Ok(k as u32)
}

pub fn build_model(p: &StructureParams) -> CliResult<RankModel> {
    let model = match p.name.as_str() {
        "spatial" => zoo::spatial(p.n, p.dim, load_positions(p)?, p.metric, p.seed)?,
        "core-periphery" => {
            zoo::core_periphery(p.n, p.dim, load_positions(p)?, p.metric, None, p.seed)?
        }
        "blocks-assortative" => {
            let membership = match &p.affiliations {
                Some(path) => read_affiliations_csv(path)?
                    .iter()
                    .map(|row| {
                        row.first()
                            .copied()
                            .ok_or(rankgraph::Error::MissingAffiliation { node: 0 })
                    })
                    .collect::<Result<Vec<u64>, _>>()?,
                None => zoo::equal_blocks(p.n, p.blocks)?,
            };
            zoo::blocks_assortative(p.n, &membership, p.seed)?
        }
        "blocks-overlapping" => match &p.affiliations {
            Some(path) => {
                let memberships = read_affiliations_csv(path)?;
                zoo::blocks_from_sets(p.n, &memberships, p.seed)?
            }
            None => zoo::blocks_overlapping(p.n, p.blocks, p.seed)?,
        },
        "cliques" => zoo::disconnected_cliques(p.n, p.m, p.seed)?,
        "nested" => zoo::nested(p.n, p.seed)?,
        "star" => zoo::star(p.n, p.seed)?,
        "perlin" => zoo::perlin(p.n, p.octaves, p.seed)?,
        "fractal-leaves" => zoo::fractal_leaves(p.n, p.seed)?,
        "fractal-root" => zoo::fractal_root(p.n, p.seed)?,
        "fractal-hierarchy" => zoo::fractal_hierarchy(p.n, p.seed)?,
        "watts-strogatz" => {
            let k = ws_k(p)?;
            if p.ws_ring {
                zoo::watts_strogatz_ring(p.n, k, p.seed)?
            } else {
                zoo::watts_strogatz_rank(p.n, k, p.seed)?
            }
        }
        "custom" => {
            let path = p
                .costs
                .as_ref()
                .ok_or_else(|| validation("structure custom requires --costs <csv>"))?;
            let costs = read_pair_costs_csv(path, p.n)?;
            let n = p.n;
            RankModel::from_cost(n, Direction::Ascending, p.seed, |u, v| {
                costs[rankgraph::NodePair { u, v }.index(n)]
            })?
        }
        other => {
            return Err(validation(format!(
                "unknown structure {other:?}; available: {}, custom",
                zoo::zoo_names().join(", ")
            )))
        }
    };
    Ok(model)
}
