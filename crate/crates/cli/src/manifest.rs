use std::fs;
use std::path::{Path, PathBuf};

use hampreserve_core::Error;
use serde::{Deserialize, Serialize};

use crate::Outcome;

pub const MANIFEST_SCHEMA: &str = "hampreserve-run/1";

/// Record of one invocation; `hampreserve replay` re-runs `args`.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema: String,
    pub subcommand: String,
    /// Command-line arguments without `--manifest`.
    pub args: Vec<String>,
    pub input: Option<PathBuf>,
    pub outputs: Vec<PathBuf>,
    pub seed: Option<u64>,
    pub wall_clock_seconds: f64,
    pub exit_code: u8,
    pub summary: String,
}

/// Drops `--manifest <path>` / `--manifest=<path>` from the arguments.
pub fn recorded_args(args: impl Iterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
        } else if a == "--manifest" {
            skip = true;
        } else if !a.starts_with("--manifest=") {
            out.push(a);
        }
    }
    out
}

impl RunManifest {
    pub fn new(
        subcommand: String,
        args: Vec<String>,
        outcome: Option<&Outcome>,
        error: Option<&Error>,
        exit_code: u8,
        wall_clock_seconds: f64,
    ) -> RunManifest {
        let summary = match (outcome, error) {
            (Some(o), _) => o.summary.clone(),
            (None, Some(e)) => format!("error: {e}"),
            (None, None) => String::new(),
        };
        RunManifest {
            schema: MANIFEST_SCHEMA.to_string(),
            subcommand,
            args,
            input: outcome.and_then(|o| o.input.clone()),
            outputs: outcome.map(|o| o.outputs.clone()).unwrap_or_default(),
            seed: outcome.and_then(|o| o.seed),
            wall_clock_seconds,
            exit_code,
            summary,
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<RunManifest, Error> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let m: RunManifest =
            serde_json::from_str(&text).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
        if m.schema != MANIFEST_SCHEMA {
            return Err(Error::Domain(format!("unsupported manifest schema {:?}", m.schema)));
        }
        Ok(m)
    }
}
