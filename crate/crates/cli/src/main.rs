//! `rankgraph`: generate random graphs whose structure is a node-pair
//! ranking, export rank matrices and probability curves, and run small-world
//! profile sweeps.
//!
//! Every output-producing command writes a `<out>.manifest.json` with the
//! fully resolved options; `--config manifest.json` replays the run
//! byte-identically. Exit codes: 0 success, 2 validation error, 3 runtime
//! error.

mod config;
mod model;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use rankgraph::io;
use rankgraph::metrics::{default_epsilon_grid, smallworld_profile};
use rankgraph::rng;
use rankgraph::sampler::{generate, GeneratorSpec};
use rankgraph::zoo;
use rankgraph::ProbabilityProfile;

use config::{
    default_seed, merge_opts, resolve_edge_target, validation, write_manifest, CliError, CliResult,
};
use model::{build_model, parse_metric, StructureParams};

#[derive(Parser)]
#[command(
    name = "rankgraph",
    version,
    about = "Rank-structured random graph generator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a graph and write it as a tab-separated edge list.
    Generate(WithConfig<GenerateOpts>),
    /// Export a structure's node-pair rank matrix as PGM or CSV.
    RankMatrix(WithConfig<RankMatrixOpts>),
    /// Export rank probability and cumulative-edge curves as CSV.
    ProbCurve(WithConfig<ProbCurveOpts>),
    /// Sweep epsilon and record clustering and short-path scores.
    Smallworld(WithConfig<SmallworldOpts>),
    /// List the built-in structure names.
    ZooList,
}

#[derive(Args)]
struct WithConfig<T: Args> {
    /// JSON config file; command-line flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    opts: T,
}

/// Flags shared by every command that builds a structure.
#[derive(Args, Serialize, Deserialize, Default, Clone)]
struct StructureOpts {
    /// Structure name (see `rankgraph zoo-list`), or `custom` with --costs.
    #[arg(long)]
    structure: Option<String>,
    /// Node count.
    #[arg(long)]
    n: Option<u32>,
    /// Edge count target.
    #[arg(long)]
    m: Option<f64>,
    /// Mean degree; implies m = n*k/2.
    #[arg(long)]
    k: Option<f64>,
    /// Edge density; implies m = density * n(n-1)/2.
    #[arg(long)]
    density: Option<f64>,
    /// Latent-space dimension for spatial structures.
    #[arg(long)]
    dim: Option<usize>,
    /// Block count for the block structures.
    #[arg(long)]
    blocks: Option<u32>,
    /// Octave count for the perlin structure.
    #[arg(long)]
    octaves: Option<u32>,
    /// Distance for spatial structures: euclidean or haversine.
    #[arg(long)]
    metric: Option<String>,
    /// Watts-Strogatz neighborhood: true = circular-distance ring lattice,
    /// false = the literal modular formula.
    #[arg(long)]
    ws_ring: Option<bool>,
    /// CSV of latent positions, one row per node.
    #[arg(long)]
    positions: Option<PathBuf>,
    /// CSV of block affiliations, one row per node.
    #[arg(long)]
    affiliations: Option<PathBuf>,
    /// CSV of (u, v, cost) rows covering all pairs, for structure=custom.
    #[arg(long)]
    costs: Option<PathBuf>,
    /// Structure seed (tie-breaking, positions, noise). Defaults to
    /// RANKGRAPH_SEED, else 0.
    #[arg(long)]
    seed: Option<u64>,
}

impl StructureOpts {
    /// Fill unset fields with their defaults; the result is what the
    /// manifest records.
    fn fill(&mut self, default_mean_degree: Option<f64>) -> CliResult<()> {
        if self.m.is_none() && self.k.is_none() && self.density.is_none() {
            if let Some(k) = default_mean_degree {
                self.k = Some(k);
            }
        }
        self.dim.get_or_insert(2);
        self.blocks.get_or_insert(4);
        self.octaves.get_or_insert(1);
        self.metric.get_or_insert_with(|| "euclidean".into());
        self.ws_ring.get_or_insert(true);
        if self.seed.is_none() {
            self.seed = Some(default_seed()?);
        }
        Ok(())
    }

    fn params(&self) -> CliResult<StructureParams> {
        let name = self
            .structure
            .clone()
            .ok_or_else(|| validation("missing --structure"))?;
        let n = self.n.ok_or_else(|| validation("missing --n"))?;
        if n < 2 {
            return Err(validation(format!("--n must be at least 2, got {n}")));
        }
        let m = resolve_edge_target(n, self.m, self.k, self.density)?;
        Ok(StructureParams {
            name,
            n,
            m,
            k: self.k,
            dim: self.dim.unwrap_or(2),
            blocks: self.blocks.unwrap_or(4),
            octaves: self.octaves.unwrap_or(1),
            metric: parse_metric(self.metric.as_deref().unwrap_or("euclidean"))?,
            ws_ring: self.ws_ring.unwrap_or(true),
            positions: self.positions.clone(),
            affiliations: self.affiliations.clone(),
            costs: self.costs.clone(),
            seed: self.seed.unwrap_or(0),
        })
    }
}

#[derive(Args, Serialize, Deserialize, Default, Clone)]
struct GenerateOpts {
    #[command(flatten)]
    #[serde(flatten)]
    structure: StructureOpts,
    /// Randomness parameter in [0, 1].
    #[arg(long)]
    epsilon: Option<f64>,
    /// Sampling seed for the per-pair edge draws. Defaults to --seed.
    #[arg(long)]
    sample_seed: Option<u64>,
    /// Output edge-list path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Serialize, Deserialize, Default, Clone)]
struct RankMatrixOpts {
    #[command(flatten)]
    #[serde(flatten)]
    structure: StructureOpts,
    /// Output format: pgm (binary grayscale) or csv.
    #[arg(long)]
    format: Option<String>,
    /// Export every zoo structure into the output directory.
    #[arg(long)]
    gallery: Option<bool>,
    /// Output path (a directory in gallery mode).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Serialize, Deserialize, Default, Clone)]
struct ProbCurveOpts {
    /// Node count the pair count is derived from.
    #[arg(long)]
    n: Option<u32>,
    /// Edge count target.
    #[arg(long)]
    m: Option<f64>,
    /// Mean degree; implies m = n*k/2.
    #[arg(long)]
    k: Option<f64>,
    /// Edge density; implies m = density * n(n-1)/2.
    #[arg(long)]
    density: Option<f64>,
    /// Comma-separated epsilon values.
    #[arg(long, value_delimiter = ',')]
    epsilons: Option<Vec<f64>>,
    /// Sample count for the cumulative curve.
    #[arg(long)]
    samples: Option<usize>,
    /// Output CSV path for the (epsilon, r, p) rows.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output CSV path for the (epsilon, x, y) cumulative rows.
    #[arg(long)]
    cumulative_out: Option<PathBuf>,
}

#[derive(Args, Serialize, Deserialize, Default, Clone)]
struct SmallworldOpts {
    #[command(flatten)]
    #[serde(flatten)]
    structure: StructureOpts,
    /// Profile every zoo structure with the same (n, m).
    #[arg(long)]
    all_zoo: Option<bool>,
    /// Comma-separated epsilon values; default is a log grid from 0 to 1.
    #[arg(long, value_delimiter = ',')]
    epsilons: Option<Vec<f64>>,
    /// Replicate graphs per epsilon.
    #[arg(long)]
    runs: Option<usize>,
    /// Sampling seed stream. Defaults to --seed.
    #[arg(long)]
    sample_seed: Option<u64>,
    /// Output CSV path (a directory in --all-zoo mode).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn require_out(out: &Option<PathBuf>) -> CliResult<&PathBuf> {
    out.as_ref().ok_or_else(|| validation("missing --out"))
}

fn cmd_generate(mut opts: GenerateOpts) -> CliResult<()> {
    opts.structure.fill(None)?;
    if opts.sample_seed.is_none() {
        opts.sample_seed = opts.structure.seed;
    }
    let params = opts.structure.params()?;
    let epsilon = opts
        .epsilon
        .ok_or_else(|| validation("missing --epsilon"))?;
    let out = require_out(&opts.out)?.clone();

    let model = build_model(&params)?;
    let profile = ProbabilityProfile::new(model.pair_count(), params.m, epsilon)?;
    let graph = generate(&GeneratorSpec {
        model: &model,
        profile: &profile,
        sample_seed: opts.sample_seed.unwrap(),
    })?;
    let header = io::EdgeListHeader {
        n: params.n,
        m: params.m,
        epsilon,
        tie_seed: params.seed,
        sample_seed: opts.sample_seed.unwrap(),
    };
    io::write_edge_list(&out, &graph, &header)?;
    write_manifest(&out, "generate", &opts)?;
    Ok(())
}

fn cmd_rank_matrix(mut opts: RankMatrixOpts) -> CliResult<()> {
    // Defaults mirror the catalog figures: n = 128, mean degree 16.
    opts.structure.n.get_or_insert(128);
    opts.structure.fill(Some(16.0))?;
    opts.gallery.get_or_insert(false);
    opts.format.get_or_insert_with(|| "pgm".into());
    let format = opts.format.clone().unwrap();
    if format != "pgm" && format != "csv" {
        return Err(validation(format!(
            "unknown format {format:?}; choose pgm or csv"
        )));
    }
    let out = require_out(&opts.out)?.clone();

    if opts.gallery.unwrap() {
        std::fs::create_dir_all(&out).map_err(|e| CliError::Runtime(e.to_string()))?;
        let mut params = opts.structure.params_with_name("gallery")?;
        for spec in zoo::gallery(params.n, params.m) {
            params.name = spec.name().to_string();
            let matrix = spec.build(params.n, params.seed)?.rank_matrix();
            let path = out.join(format!("{}.{format}", spec.name()));
            match format.as_str() {
                "pgm" => io::write_rank_matrix_pgm(&path, &matrix)?,
                _ => io::write_rank_matrix_csv(&path, &matrix)?,
            }
        }
    } else {
        let params = opts.structure.params()?;
        let matrix = build_model(&params)?.rank_matrix();
        match format.as_str() {
            "pgm" => io::write_rank_matrix_pgm(&out, &matrix)?,
            _ => io::write_rank_matrix_csv(&out, &matrix)?,
        }
    }
    write_manifest(&out, "rank-matrix", &opts)?;
    Ok(())
}

fn cmd_prob_curve(mut opts: ProbCurveOpts) -> CliResult<()> {
    // Defaults match the reference curve setup: n = 512, m = 128.
    opts.n.get_or_insert(512);
    if opts.m.is_none() && opts.k.is_none() && opts.density.is_none() {
        opts.m = Some(128.0);
    }
    opts.epsilons.get_or_insert_with(default_epsilon_grid);
    opts.samples.get_or_insert(512);
    let out = require_out(&opts.out)?.clone();
    if opts.cumulative_out.is_none() {
        opts.cumulative_out = Some(PathBuf::from(format!("{}.cumulative.csv", out.display())));
    }

    let n = opts.n.unwrap();
    let m = resolve_edge_target(n, opts.m, opts.k, opts.density)?;
    let l = rankgraph::pair::pair_count(n);
    let profiles: Vec<ProbabilityProfile> = opts
        .epsilons
        .as_ref()
        .unwrap()
        .iter()
        .map(|&e| ProbabilityProfile::new(l, m, e))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&ProbabilityProfile> = profiles.iter().collect();
    io::atomic_write(&out, &io::profile_csv_bytes(&refs))?;
    io::atomic_write(
        opts.cumulative_out.as_ref().unwrap(),
        &io::cumulative_csv_bytes(&refs, opts.samples.unwrap())?,
    )?;
    write_manifest(&out, "prob-curve", &opts)?;
    Ok(())
}

fn cmd_smallworld(mut opts: SmallworldOpts) -> CliResult<()> {
    // Defaults match the reference experiment: n = 1000, k = 10.
    opts.structure.n.get_or_insert(1000);
    opts.structure.fill(Some(10.0))?;
    opts.all_zoo.get_or_insert(false);
    opts.epsilons.get_or_insert_with(default_epsilon_grid);
    opts.runs.get_or_insert(5);
    if opts.sample_seed.is_none() {
        opts.sample_seed = opts.structure.seed;
    }
    let out = require_out(&opts.out)?.clone();
    let runs = opts.runs.unwrap();
    if runs < 1 {
        return Err(validation("--runs must be at least 1"));
    }
    let epsilons = opts.epsilons.clone().unwrap();
    let sample_seed = opts.sample_seed.unwrap();

    if opts.all_zoo.unwrap() {
        std::fs::create_dir_all(&out).map_err(|e| CliError::Runtime(e.to_string()))?;
        let params = opts.structure.params_with_name("zoo")?;
        for (i, spec) in zoo::gallery(params.n, params.m).iter().enumerate() {
            let model = spec.build(params.n, params.seed)?;
            let result = smallworld_profile(
                spec.name(),
                &model,
                params.m,
                &epsilons,
                runs,
                rng::derive(sample_seed, i as u64),
            )?;
            io::write_profile_result_csv(&out.join(format!("{}.csv", spec.name())), &result)?;
        }
    } else {
        let params = opts.structure.params()?;
        let model = build_model(&params)?;
        let result =
            smallworld_profile(&params.name, &model, params.m, &epsilons, runs, sample_seed)?;
        io::write_profile_result_csv(&out, &result)?;
    }
    write_manifest(&out, "smallworld", &opts)?;
    Ok(())
}

impl StructureOpts {
    /// Like [`StructureOpts::params`] but without requiring --structure,
    /// for the gallery/zoo modes.
    fn params_with_name(&self, name: &str) -> CliResult<StructureParams> {
        let mut with_name = self.clone();
        with_name.structure.get_or_insert_with(|| name.into());
        with_name.params()
    }
}

fn cmd_zoo_list() {
    for name in zoo::zoo_names() {
        println!("{name}");
    }
    println!("custom");
}

fn run() -> CliResult<()> {
    match Cli::parse().command {
        Command::Generate(c) => cmd_generate(merge_opts(&c.opts, c.config.as_deref())?),
        Command::RankMatrix(c) => cmd_rank_matrix(merge_opts(&c.opts, c.config.as_deref())?),
        Command::ProbCurve(c) => cmd_prob_curve(merge_opts(&c.opts, c.config.as_deref())?),
        Command::Smallworld(c) => cmd_smallworld(merge_opts(&c.opts, c.config.as_deref())?),
        Command::ZooList => {
            cmd_zoo_list();
            Ok(())
        }
    }
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
