//! Graph scoring and the small-world profiling sweep.
//!
//! The headline score is `delta_hat`, a scaled short-path index in `[0, 1]`:
//! zero when the largest component covers at most 90% of the nodes, and
//! `1 / (1 + max(0, d - 2))` otherwise, where `d` is the mean BFS distance
//! inside the largest component. A full star scores 1; a long ring scores
//! near 0.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::profile::ProbabilityProfile;
use crate::rank::RankModel;
use crate::sampler::generate_batch;
use crate::{rng, Result};

/// Local clustering of one node: fraction of its neighbor pairs that are
/// themselves connected. Degree below 2 counts as 0.
pub fn local_clustering(g: &Graph, node: u32) -> f64 {
    let nbrs = g.neighbors(node);
    let d = nbrs.len();
    if d < 2 {
        return 0.0;
    }
    let mut closed = 0usize;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                closed += 1;
            }
        }
    }
    closed as f64 / (d * (d - 1) / 2) as f64
}

/// Average local clustering coefficient over all nodes.
pub fn clustering_coefficient(g: &Graph) -> f64 {
    if g.node_count() == 0 {
        return 0.0;
    }
    (0..g.node_count())
        .map(|v| local_clustering(g, v))
        .sum::<f64>()
        / g.node_count() as f64
}

/// Connected components as sorted node lists, ordered by smallest node id.
pub fn connected_components(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.node_count() as usize;
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..g.node_count() {
        if seen[start as usize] {
            continue;
        }
        let mut comp = Vec::new();
        seen[start as usize] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Largest connected component; ties broken by smallest minimum node id
/// (the first such component in node order).
pub fn largest_component(g: &Graph) -> Vec<u32> {
    connected_components(g)
        .into_iter()
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b[0].cmp(&a[0])))
        .unwrap_or_default()
}

/// Mean BFS geodesic distance over unordered node pairs of `component`.
/// Zero when the component has fewer than two nodes.
pub fn mean_distance(g: &Graph, component: &[u32]) -> f64 {
    let size = component.len();
    if size < 2 {
        return 0.0;
    }
    let n = g.node_count() as usize;
    let mut in_comp = vec![false; n];
    for &v in component {
        in_comp[v as usize] = true;
    }
    let mut total = 0u64;
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for &source in component {
        for &v in component {
            dist[v as usize] = u32::MAX;
        }
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            for &w in g.neighbors(v) {
                if in_comp[w as usize] && dist[w as usize] == u32::MAX {
                    dist[w as usize] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        total += component
            .iter()
            .map(|&v| dist[v as usize] as u64)
            .sum::<u64>();
    }
    // Each unordered pair was counted twice.
    total as f64 / (size * (size - 1)) as f64
}

/// The component fraction and short-path score together, so profiling does
/// one BFS pass per graph.
pub fn delta_hat_parts(g: &Graph) -> (f64, f64, f64) {
    let comp = largest_component(g);
    let gcc_fraction = if g.node_count() == 0 {
        0.0
    } else {
        comp.len() as f64 / g.node_count() as f64
    };
    let d = mean_distance(g, &comp);
    let delta = if gcc_fraction <= 0.9 {
        0.0
    } else {
        1.0 / (1.0 + (d - 2.0).max(0.0))
    };
    (delta, gcc_fraction, d)
}

/// Scaled short-path score: 0 if the largest component covers at most 90%
/// of nodes, else `1 / (1 + max(0, d - 2))`.
pub fn delta_hat(g: &Graph) -> f64 {
    delta_hat_parts(g).0
}

/// Spearman rank correlation: Pearson correlation of average-tied ranks.
/// Returns 0 when either variable is constant.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);
    pearson(&rx, &ry)
}

fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // 1-based ranks, ties get the mean rank of the run.
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = rank;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    if n == 0.0 {
        return 0.0;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        0.0
    } else {
        sxy / (sxx * syy).sqrt()
    }
}

/// Default logarithmic sweep: 0, then 10^-3 .. 10^-0.5 in half-decade
/// steps, then 1.
pub fn default_epsilon_grid() -> Vec<f64> {
    let mut grid = vec![0.0];
    for i in 0..6 {
        grid.push(10f64.powf(-3.0 + 0.5 * i as f64));
    }
    grid.push(1.0);
    grid
}

/// Averaged scores for one epsilon value.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricRow {
    pub epsilon: f64,
    pub cc_mean: f64,
    pub cc_std: f64,
    pub delta_hat_mean: f64,
    pub delta_hat_std: f64,
    pub gcc_fraction_mean: f64,
    pub mean_distance_mean: f64,
    pub runs: usize,
}

/// A small-world profile: one row per epsilon, in increasing epsilon order.
#[derive(Debug, Clone)]
pub struct ProfileResult {
    pub structure: String,
    pub n: u32,
    pub m: f64,
    pub rows: Vec<MetricRow>,
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Sweep epsilon over `model`: for each value, sample `runs` graphs and
/// average the scores. Replicate seeds derive from `seed_stream` and the
/// epsilon row index, so rows are independent and the whole sweep is
/// deterministic.
pub fn smallworld_profile(
    structure: &str,
    model: &RankModel,
    m: f64,
    epsilons: &[f64],
    runs: usize,
    seed_stream: u64,
) -> Result<ProfileResult> {
    let mut eps: Vec<f64> = epsilons.to_vec();
    eps.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eps.dedup();
    let mut rows = Vec::with_capacity(eps.len());
    for (i, &epsilon) in eps.iter().enumerate() {
        let profile = ProbabilityProfile::new(model.pair_count(), m, epsilon)?;
        let graphs = generate_batch(model, &profile, runs, rng::derive(seed_stream, i as u64))?;
        let ccs: Vec<f64> = graphs.iter().map(clustering_coefficient).collect();
        let parts: Vec<(f64, f64, f64)> = graphs.iter().map(delta_hat_parts).collect();
        let deltas: Vec<f64> = parts.iter().map(|p| p.0).collect();
        let (cc_mean, cc_std) = mean_std(&ccs);
        let (delta_hat_mean, delta_hat_std) = mean_std(&deltas);
        rows.push(MetricRow {
            epsilon,
            cc_mean,
            cc_std,
            delta_hat_mean,
            delta_hat_std,
            gcc_fraction_mean: parts.iter().map(|p| p.1).sum::<f64>() / runs as f64,
            mean_distance_mean: parts.iter().map(|p| p.2).sum::<f64>() / runs as f64,
            runs,
        });
    }
    Ok(ProfileResult {
        structure: structure.to_string(),
        n: model.n(),
        m,
        rows,
    })
}
