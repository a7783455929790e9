use std::fs;
use std::path::{Path, PathBuf};

use gegmra::pipeline::PipelineConfig;
use gegmra::powersys::SourceParams;
use serde::Deserialize;

use crate::CliError;

pub const OUT_DIR_ENV: &str = "GEGMRA_OUT_DIR";

/// Settings read from `--config`. Every field is optional; command-line
/// flags override whatever is given here.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub pipeline: PipelineConfig,
    /// Source data applied to generated scenarios (`simulate`, `sweep paper`).
    pub sources: SourceParams,
    pub out_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config {
            path: path.to_path_buf(),
            reason: e.to_string(),
        })
    }

    /// `--out`, then the config file, then the environment, then `.`.
    pub fn output_dir(&self, flag: Option<&Path>) -> PathBuf {
        flag.map(Path::to_path_buf)
            .or_else(|| self.out_dir.clone())
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("."))
    }
}
