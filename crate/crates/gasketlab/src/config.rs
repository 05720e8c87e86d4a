//! Run configuration. Each setting is taken from the command line if
//! given, else from a `GASKETLAB_*` environment variable, else from the
//! TOML config file, else the built-in default.

use std::path::Path;

use gasket_core::DEFAULT_VERTEX_CAP;
use serde::Deserialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Jsonl,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub vertex_cap: u64,
    pub time_budget_s: u64,
    pub jobs: usize,
    pub output_format: OutputFormat,
    /// Entries in the oracle's LRU cache; 0 disables it.
    pub oracle_cache: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            vertex_cap: DEFAULT_VERTEX_CAP,
            time_budget_s: 60,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output_format: OutputFormat::Csv,
            oracle_cache: 0,
        }
    }
}

/// Any subset of the settings, as read from one source.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    pub vertex_cap: Option<u64>,
    pub time_budget_s: Option<u64>,
    pub jobs: Option<usize>,
    pub output_format: Option<OutputFormat>,
    pub oracle_cache: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("bad config file {path}: {source}")]
    Toml {
        path: String,
        source: toml::de::Error,
    },
    #[error("{name}={value:?} is not valid: {reason}")]
    Env {
        name: &'static str,
        value: String,
        reason: String,
    },
    #[error("{0} must be at least 1")]
    Zero(&'static str),
}

impl Layer {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.display().to_string(),
            source,
        })?;
        toml::from_str(&text).map_err(|source| ConfigError::Toml {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn from_env(get: impl Fn(&str) -> Option<String>) -> Result<Self, ConfigError> {
        fn num<T: std::str::FromStr>(
            get: &impl Fn(&str) -> Option<String>,
            name: &'static str,
        ) -> Result<Option<T>, ConfigError>
        where
            T::Err: std::fmt::Display,
        {
            get(name)
                .map(|value| {
                    value.trim().parse().map_err(|e: T::Err| ConfigError::Env {
                        name,
                        reason: e.to_string(),
                        value,
                    })
                })
                .transpose()
        }
        let output_format = match get("GASKETLAB_OUTPUT_FORMAT") {
            None => None,
            Some(v) => Some(
                <OutputFormat as clap::ValueEnum>::from_str(v.trim(), true).map_err(|reason| {
                    ConfigError::Env {
                        name: "GASKETLAB_OUTPUT_FORMAT",
                        value: v,
                        reason,
                    }
                })?,
            ),
        };
        Ok(Layer {
            vertex_cap: num(&get, "GASKETLAB_VERTEX_CAP")?,
            time_budget_s: num(&get, "GASKETLAB_TIME_BUDGET_S")?,
            jobs: num(&get, "GASKETLAB_JOBS")?,
            output_format,
            oracle_cache: num(&get, "GASKETLAB_ORACLE_CACHE")?,
        })
    }

    /// `self` where set, `lower` elsewhere.
    pub fn over(self, lower: Layer) -> Layer {
        Layer {
            vertex_cap: self.vertex_cap.or(lower.vertex_cap),
            time_budget_s: self.time_budget_s.or(lower.time_budget_s),
            jobs: self.jobs.or(lower.jobs),
            output_format: self.output_format.or(lower.output_format),
            oracle_cache: self.oracle_cache.or(lower.oracle_cache),
        }
    }
}

impl Config {
    pub fn resolve(flags: Layer, env: Layer, file: Layer) -> Result<Config, ConfigError> {
        let merged = flags.over(env).over(file);
        let d = Config::default();
        let c = Config {
            vertex_cap: merged.vertex_cap.unwrap_or(d.vertex_cap),
            time_budget_s: merged.time_budget_s.unwrap_or(d.time_budget_s),
            jobs: merged.jobs.unwrap_or(d.jobs),
            output_format: merged.output_format.unwrap_or(d.output_format),
            oracle_cache: merged.oracle_cache.unwrap_or(d.oracle_cache),
        };
        if c.vertex_cap == 0 {
            return Err(ConfigError::Zero("vertex_cap"));
        }
        if c.jobs == 0 {
            return Err(ConfigError::Zero("jobs"));
        }
        Ok(c)
    }
}
