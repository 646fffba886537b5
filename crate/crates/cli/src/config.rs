//! Run configuration: built-in defaults, then a TOML file, then flags.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use gmcone::TeichPoint;
use serde::{Deserialize, Serialize};

use crate::parse::{format_tau, parse_tau};

pub const DEFAULT_TRUNCATION: u32 = 50;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_SAMPLES: usize = 4096;
pub const DEFAULT_TRIALS: usize = 500;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub basepoint: TeichPoint,
    pub truncation: u32,
    pub tol: f64,
    pub samples: usize,
    pub trials: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            basepoint: TeichPoint::i(),
            truncation: DEFAULT_TRUNCATION,
            tol: DEFAULT_TOL,
            samples: DEFAULT_SAMPLES,
            trials: DEFAULT_TRIALS,
            seed: 0,
            out: None,
        }
    }
}

/// Every field optional; used both for the config file and for flags.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub basepoint: Option<String>,
    pub truncation: Option<u32>,
    pub tol: Option<f64>,
    pub samples: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

impl Overrides {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

impl RunConfig {
    pub fn apply(mut self, o: &Overrides) -> Result<Self> {
        if let Some(b) = &o.basepoint {
            self.basepoint = parse_tau(b).context("basepoint")?;
        }
        if let Some(v) = o.truncation {
            self.truncation = v;
        }
        if let Some(v) = o.tol {
            self.tol = v;
        }
        if let Some(v) = o.samples {
            self.samples = v;
        }
        if let Some(v) = o.trials {
            self.trials = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if let Some(v) = &o.out {
            self.out = Some(v.clone());
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.truncation == 0 {
            bail!("truncation must be positive");
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            bail!("tolerance must be positive, got {}", self.tol);
        }
        if self.samples < 64 {
            bail!("need at least 64 grid samples, got {}", self.samples);
        }
        if self.trials == 0 {
            bail!("trials must be positive");
        }
        Ok(())
    }

    /// File settings first, flags on top.
    pub fn resolve(file: Option<&Path>, flags: &Overrides) -> Result<Self> {
        let mut config = RunConfig::default();
        if let Some(path) = file {
            config = config.apply(&Overrides::from_file(path)?)?;
        }
        config.apply(flags)
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            basepoint: format_tau(&self.basepoint),
            truncation: self.truncation,
            tol: self.tol,
            samples: self.samples,
            trials: self.trials,
            seed: self.seed,
        }
    }
}

/// The configuration as recorded in reports; the output path is left out so
/// that reports written to different files compare equal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub basepoint: String,
    pub truncation: u32,
    pub tol: f64,
    pub samples: usize,
    pub trials: usize,
    pub seed: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.toml");
        std::fs::write(&path, "trials = 20\nseed = 4\nbasepoint = \"1/2,2\"\n").unwrap();
        let flags = Overrides {
            seed: Some(9),
            ..Default::default()
        };
        let c = RunConfig::resolve(Some(&path), &flags).unwrap();
        assert_eq!(c.trials, 20);
        assert_eq!(c.seed, 9);
        assert_eq!(c.echo().basepoint, "1/2,2");
        assert_eq!(c.truncation, DEFAULT_TRUNCATION);
    }

    #[test]
    fn rejects_bad_values() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.toml");
        std::fs::write(&path, "colour = 3\n").unwrap();
        assert!(RunConfig::resolve(Some(&path), &Overrides::default()).is_err());
        let flags = Overrides {
            tol: Some(-1.0),
            ..Default::default()
        };
        assert!(RunConfig::resolve(None, &flags).is_err());
    }
}
