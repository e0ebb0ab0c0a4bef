//! Option merging and validation.
//!
//! Every subcommand's options live in a serde struct of `Option` fields.
//! Resolution order: built-in defaults < JSON config file (`--config`) <
//! command-line flags. After resolution the fully concrete option set is
//! written back as the run manifest, so `--config manifest.json` replays the
//! run exactly.

use std::fmt;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

/// Errors split by exit code: validation problems exit 2, runtime failures
/// (I/O, numerics) exit 3.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "error: {m}"),
            CliError::Runtime(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<rankgraph::Error> for CliError {
    fn from(e: rankgraph::Error) -> Self {
        match e {
            rankgraph::Error::Io(io) => CliError::Runtime(io.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn validation(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Overlay non-null values of `over` onto `base`, recursing into objects.
fn merge_value(base: &mut Value, over: Value) {
    match (base, over) {
        (Value::Object(b), Value::Object(o)) => {
            for (key, val) in o {
                if val.is_null() {
                    continue;
                }
                merge_value(b.entry(key).or_insert(Value::Null), val);
            }
        }
        (b, v) => {
            if !v.is_null() {
                *b = v;
            }
        }
    }
}

/// Merge the command-line options over an optional JSON config file.
pub fn merge_opts<T: Serialize + DeserializeOwned>(cli: &T, config: Option<&Path>) -> CliResult<T> {
    let mut base = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| validation(format!("cannot read config {}: {e}", path.display())))?;
            serde_json::from_str::<Value>(&text)
                .map_err(|e| validation(format!("invalid JSON in {}: {e}", path.display())))?
        }
        None => Value::Object(Default::default()),
    };
    let over = serde_json::to_value(cli)
        .map_err(|e| CliError::Runtime(format!("cannot serialize options: {e}")))?;
    merge_value(&mut base, over);
    serde_json::from_value(base).map_err(|e| validation(format!("invalid configuration: {e}")))
}

/// Default seed: the `RANKGRAPH_SEED` environment variable, else 0.
pub fn default_seed() -> CliResult<u64> {
    match std::env::var("RANKGRAPH_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| validation(format!("RANKGRAPH_SEED is not a valid seed: {text:?}"))),
        Err(_) => Ok(0),
    }
}

/// Resolve the `--m` / `--k` / `--density` trio (exactly one) into an edge
/// target.
pub fn resolve_edge_target(
    n: u32,
    m: Option<f64>,
    k: Option<f64>,
    density: Option<f64>,
) -> CliResult<f64> {
    let l = rankgraph::pair::pair_count(n) as f64;
    let given = m.is_some() as u8 + k.is_some() as u8 + density.is_some() as u8;
    if given > 1 {
        return Err(validation(
            "give exactly one of --m, --k, --density".to_string(),
        ));
    }
    let target = if let Some(m) = m {
        m
    } else if let Some(k) = k {
        n as f64 * k / 2.0
    } else if let Some(d) = density {
        if !(0.0..=1.0).contains(&d) {
            return Err(validation(format!("--density must be in [0, 1], got {d}")));
        }
        d * l
    } else {
        return Err(validation(
            "missing density specifier: give one of --m, --k, --density".to_string(),
        ));
    };
    if !(0.0..=l).contains(&target) {
        return Err(validation(format!(
            "edge target {target} is outside [0, {l}] for n = {n}"
        )));
    }
    Ok(target)
}

/// Write the resolved options next to `out` as `<out>.manifest.json`.
pub fn write_manifest<T: Serialize>(out: &Path, command: &str, resolved: &T) -> CliResult<()> {
    let mut value = serde_json::to_value(resolved)
        .map_err(|e| CliError::Runtime(format!("cannot serialize manifest: {e}")))?;
    if let Value::Object(map) = &mut value {
        map.insert("command".into(), Value::String(command.into()));
    }
    let path = manifest_path(out);
    let text = serde_json::to_string_pretty(&value)
        .map_err(|e| CliError::Runtime(format!("cannot serialize manifest: {e}")))?;
    rankgraph::io::atomic_write(&path, text.as_bytes())
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    Ok(())
}

pub fn manifest_path(out: &Path) -> std::path::PathBuf {
    if out.is_dir() {
        out.join("manifest.json")
    } else {
        std::path::PathBuf::from(format!("{}.manifest.json", out.display()))
    }
}
