use crate::error::{Error, Result};
use crate::families::DEFAULT_BUDGET;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Run settings; echoed into every JSON output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub vertex_budget: usize,
    pub numeric_tolerance: f64,
    pub decomposition_seed: u64,
    pub sampling_seed: u64,
    /// Random points tried per search before the symbolic analysis.
    pub retry_count: usize,
    /// Directory that relative `--output` paths are resolved against.
    pub output_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            vertex_budget: DEFAULT_BUDGET,
            numeric_tolerance: 1e-9,
            decomposition_seed: 0xdec0,
            sampling_seed: 0x5eed,
            retry_count: 8,
            output_dir: None,
        }
    }
}

impl Config {
    /// Reads a JSON config file; missing fields take their defaults.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: Config = serde_json::from_str(&text).map_err(|e| Error::Parse {
            line: e.line(),
            message: format!("{}: {e}", path.display()),
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertex_budget == 0 {
            return Err(Error::InvalidParams("vertex_budget must be positive".into()));
        }
        if !(self.numeric_tolerance > 0.0 && self.numeric_tolerance.is_finite()) {
            return Err(Error::InvalidParams("numeric_tolerance must be positive".into()));
        }
        if self.retry_count == 0 {
            return Err(Error::InvalidParams("retry_count must be positive".into()));
        }
        Ok(())
    }

    pub fn resolve(&self, path: &Path) -> PathBuf {
        match &self.output_dir {
            Some(dir) if path.is_relative() => dir.join(path),
            _ => path.to_path_buf(),
        }
    }

    pub fn certify_options(&self) -> crate::uniform::CertifyOptions {
        crate::uniform::CertifyOptions { seed: self.sampling_seed, retries: self.retry_count }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_config_fills_defaults() {
        let cfg: Config = serde_json::from_str(r#"{"vertex_budget": 500}"#).unwrap();
        assert_eq!(cfg.vertex_budget, 500);
        assert_eq!(cfg.retry_count, 8);
        assert!(serde_json::from_str::<Config>(r#"{"budget": 5}"#).is_err());
        assert!(Config { retry_count: 0, ..Config::default() }.validate().is_err());
    }
}
