//! File formats: edge lists, rank-matrix CSV/PGM, profile curves, metric
//! CSVs, and the input readers for positions, affiliations, and custom pair
//! costs.
//!
//! All writers go through [`atomic_write`]: content is staged in a temp file
//! next to the destination and renamed into place, so a failed run never
//! leaves a partial output file.

use std::io::Write as _;
use std::path::Path;

use crate::graph::Graph;
use crate::metrics::ProfileResult;
use crate::pair::{all_pairs, pair_count};
use crate::profile::{cumulative_edges, ProbabilityProfile};
use crate::rank::RankMatrix;
use crate::zoo::Positions;
use crate::{Error, Result};

/// Write `bytes` to `path` atomically (temp file + rename in the same
/// directory).
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(d) => tempfile::NamedTempFile::new_in(d)?,
        None => tempfile::NamedTempFile::new_in(".")?,
    };
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// Generation parameters echoed as `#` comments at the top of an edge list.
#[derive(Debug, Clone)]
pub struct EdgeListHeader {
    pub n: u32,
    pub m: f64,
    pub epsilon: f64,
    pub tie_seed: u64,
    pub sample_seed: u64,
}

/// Edge list: header comments, then one `u<TAB>v` line per edge, 0-based.
pub fn edge_list_bytes(g: &Graph, header: &EdgeListHeader) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(&format!("# n = {}\n", header.n));
    out.push_str(&format!("# m = {}\n", header.m));
    out.push_str(&format!("# epsilon = {}\n", header.epsilon));
    out.push_str(&format!("# tie_seed = {}\n", header.tie_seed));
    out.push_str(&format!("# sample_seed = {}\n", header.sample_seed));
    out.push_str(&format!("# edges = {}\n", g.edge_count()));
    for e in g.edges() {
        out.push_str(&format!("{}\t{}\n", e.u, e.v));
    }
    out.into_bytes()
}

pub fn write_edge_list(path: &Path, g: &Graph, header: &EdgeListHeader) -> Result<()> {
    atomic_write(path, &edge_list_bytes(g, header))
}

/// Rank matrix as CSV: `n` rows of `n` cells, diagonal cells left empty.
pub fn rank_matrix_csv_bytes(m: &RankMatrix) -> Vec<u8> {
    let n = m.n();
    let mut out = String::new();
    for u in 0..n {
        for v in 0..n {
            if v > 0 {
                out.push(',');
            }
            if u != v {
                out.push_str(&m.get(u, v).to_string());
            }
        }
        out.push('\n');
    }
    out.into_bytes()
}

pub fn write_rank_matrix_csv(path: &Path, m: &RankMatrix) -> Result<()> {
    atomic_write(path, &rank_matrix_csv_bytes(m))
}

/// Rank matrix as binary PGM (`P5`, maxval 255): darker pixels are lower
/// ranks, the diagonal renders white.
pub fn rank_matrix_pgm_bytes(m: &RankMatrix) -> Vec<u8> {
    let n = m.n();
    let mut out = format!("P5\n{n} {n}\n255\n").into_bytes();
    out.extend_from_slice(&m.to_pixels());
    out
}

pub fn write_rank_matrix_pgm(path: &Path, m: &RankMatrix) -> Result<()> {
    atomic_write(path, &rank_matrix_pgm_bytes(m))
}

/// Probability profile as CSV rows `(epsilon, r, p)`.
pub fn profile_csv_bytes(profiles: &[&ProbabilityProfile]) -> Vec<u8> {
    let mut out = String::from("epsilon,r,p\n");
    for p in profiles {
        for (i, &prob) in p.probabilities().iter().enumerate() {
            out.push_str(&format!("{},{},{}\n", p.epsilon(), i + 1, prob));
        }
    }
    out.into_bytes()
}

/// Cumulative curve `Y(x)` sampled at `samples + 1` evenly spaced abscissas,
/// as CSV rows `(epsilon, x, y)`.
pub fn cumulative_csv_bytes(profiles: &[&ProbabilityProfile], samples: usize) -> Result<Vec<u8>> {
    let mut out = String::from("epsilon,x,y\n");
    for p in profiles {
        let l = p.pair_count();
        for i in 0..=samples {
            let x = l as f64 * i as f64 / samples as f64;
            let y = match p.epsilon() {
                e if e == 0.0 => x.min(p.target_edges()),
                _ => cumulative_edges(l, p.target_edges(), p.weight(), x)?,
            };
            out.push_str(&format!("{},{},{}\n", p.epsilon(), x, y));
        }
    }
    Ok(out.into_bytes())
}

/// Small-world profile CSV, one row per epsilon.
pub fn profile_result_csv_bytes(result: &ProfileResult) -> Vec<u8> {
    let mut out = String::from(
        "structure,n,m,epsilon,cc_mean,cc_std,delta_hat_mean,delta_hat_std,gcc_fraction_mean,mean_distance_mean,runs\n",
    );
    for row in &result.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            result.structure,
            result.n,
            result.m,
            row.epsilon,
            row.cc_mean,
            row.cc_std,
            row.delta_hat_mean,
            row.delta_hat_std,
            row.gcc_fraction_mean,
            row.mean_distance_mean,
            row.runs
        ));
    }
    out.into_bytes()
}

pub fn write_profile_result_csv(path: &Path, result: &ProfileResult) -> Result<()> {
    atomic_write(path, &profile_result_csv_bytes(result))
}

fn parse_error(path: &Path, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

/// Read latent positions: headerless CSV, one row per node, float columns.
pub fn read_positions_csv(path: &Path) -> Result<Positions> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| parse_error(path, e.to_string()))?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| parse_error(path, e.to_string()))?;
        let row: std::result::Result<Vec<f64>, _> =
            record.iter().map(|f| f.parse::<f64>()).collect();
        rows.push(row.map_err(|e| parse_error(path, format!("row {}: {e}", i + 1)))?);
    }
    Positions::new(rows)
}

/// Read block affiliations: headerless CSV, one row per node. A single
/// column gives one block per node; extra columns give overlapping blocks.
pub fn read_affiliations_csv(path: &Path) -> Result<Vec<Vec<u64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| parse_error(path, e.to_string()))?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| parse_error(path, e.to_string()))?;
        let row: std::result::Result<Vec<u64>, _> = record
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.parse::<u64>())
            .collect();
        rows.push(row.map_err(|e| parse_error(path, format!("row {}: {e}", i + 1)))?);
    }
    Ok(rows)
}

/// Read a custom cost table: headerless CSV rows `(u, v, cost)` covering
/// every pair of `0..n`. Returns costs indexed by the row-major pair index;
/// a missing pair is reported by name (first in row-major order).
pub fn read_pair_costs_csv(path: &Path, n: u32) -> Result<Vec<f64>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| parse_error(path, e.to_string()))?;
    let l = pair_count(n);
    let mut costs = vec![f64::NAN; l];
    let mut present = vec![false; l];
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| parse_error(path, e.to_string()))?;
        let fields: Vec<&str> = record.iter().collect();
        if fields.len() != 3 {
            return Err(parse_error(
                path,
                format!("row {}: expected 3 fields (u, v, cost)", i + 1),
            ));
        }
        let mut u: u32 = fields[0]
            .parse()
            .map_err(|e| parse_error(path, format!("row {}: {e}", i + 1)))?;
        let mut v: u32 = fields[1]
            .parse()
            .map_err(|e| parse_error(path, format!("row {}: {e}", i + 1)))?;
        if u > v {
            std::mem::swap(&mut u, &mut v);
        }
        let cost: f64 = fields[2]
            .parse()
            .map_err(|e| parse_error(path, format!("row {}: {e}", i + 1)))?;
        let pair = crate::pair::NodePair::new(u, v, n)?;
        let idx = pair.index(n);
        costs[idx] = cost;
        present[idx] = true;
    }
    if let Some(idx) = present.iter().position(|&p| !p) {
        let pair = all_pairs(n).nth(idx).unwrap();
        return Err(Error::MissingPairCost {
            u: pair.u,
            v: pair.v,
        });
    }
    Ok(costs)
}
