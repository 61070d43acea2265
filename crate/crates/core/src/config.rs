//! TOML run configuration.
//!
//! ```toml
//! method = "direct"
//! a = "1"
//! b = "1"
//! quintic_coeffs = ["1"]
//! cubic_coeffs = ["1"]
//! x1 = "1"
//! alphas = ["2"]
//! betas = ["2"]
//! shift = "1"
//!
//! [[seeds]]
//! curve = "completed"
//! x = "-44/3"
//! y = "20/3"
//! ```
//!
//! The paired method uses `quintic_pair_coeffs`, `cubic_pair_coeffs`, `xs`
//! and `ys` instead.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{FactorBudget, Rational};
use crate::equation::{
    DiophantineEquation, EquationError, Model, PairedEquation, PairedParametrization,
    Parametrization,
};
use crate::pipeline::{
    PipelineConfig, SeedPoint, DEFAULT_FAMILY_SIZE, DEFAULT_MAX_SEARCH_SEEDS, DEFAULT_SEARCH_HEIGHT,
};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Syntax(#[from] toml::de::Error),
    #[error("missing field `{field}` for method {method}")]
    Missing { field: &'static str, method: &'static str },
    #[error("field `{field}` does not apply to method {method}")]
    Unexpected { field: &'static str, method: &'static str },
    #[error(transparent)]
    Equation(#[from] EquationError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Direct,
    Paired,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Human,
    Records,
}

fn default_height() -> u64 {
    DEFAULT_SEARCH_HEIGHT
}

fn default_family() -> u32 {
    DEFAULT_FAMILY_SIZE
}

fn default_max_seeds() -> usize {
    DEFAULT_MAX_SEARCH_SEEDS
}

fn is_default<T: Default + PartialEq>(x: &T) -> bool {
    *x == T::default()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub method: Method,

    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quintic_coeffs: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubic_coeffs: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x1: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betas: Option<Vec<Rational>>,

    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quintic_pair_coeffs: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cubic_pair_coeffs: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xs: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ys: Option<Vec<Rational>>,

    #[serde(default = "default_height")]
    pub search_height: u64,
    #[serde(default = "default_family")]
    pub family_size: u32,
    #[serde(default = "default_max_seeds")]
    pub max_search_seeds: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<Rational>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub combine_seeds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trial_bound: Option<u64>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<SeedPoint>,
}

fn need<T: Clone>(value: &Option<T>, field: &'static str, method: &'static str) -> Result<T, ConfigError> {
    value.clone().ok_or(ConfigError::Missing { field, method })
}

fn reject<T>(value: &Option<T>, field: &'static str, method: &'static str) -> Result<(), ConfigError> {
    match value {
        Some(_) => Err(ConfigError::Unexpected { field, method }),
        None => Ok(()),
    }
}

impl ConfigDocument {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config documents always serialize")
    }

    pub fn model(&self) -> Result<Model, ConfigError> {
        match self.method {
            Method::Direct => {
                const M: &str = "direct";
                reject(&self.quintic_pair_coeffs, "quintic_pair_coeffs", M)?;
                reject(&self.cubic_pair_coeffs, "cubic_pair_coeffs", M)?;
                reject(&self.xs, "xs", M)?;
                reject(&self.ys, "ys", M)?;
                let equation = DiophantineEquation::new(
                    need(&self.a, "a", M)?,
                    need(&self.b, "b", M)?,
                    self.quintic_coeffs.clone().unwrap_or_default(),
                    self.cubic_coeffs.clone().unwrap_or_default(),
                )?;
                let parametrization = Parametrization {
                    x1: need(&self.x1, "x1", M)?,
                    alphas: self.alphas.clone().unwrap_or_default(),
                    betas: self.betas.clone().unwrap_or_default(),
                };
                Ok(Model::direct(equation, parametrization)?)
            }
            Method::Paired => {
                const M: &str = "paired";
                for (v, f) in [(&self.a, "a"), (&self.b, "b"), (&self.x1, "x1")] {
                    reject(v, f, M)?;
                }
                for (v, f) in [
                    (&self.quintic_coeffs, "quintic_coeffs"),
                    (&self.cubic_coeffs, "cubic_coeffs"),
                    (&self.alphas, "alphas"),
                    (&self.betas, "betas"),
                ] {
                    reject(v, f, M)?;
                }
                let equation = PairedEquation::new(
                    need(&self.quintic_pair_coeffs, "quintic_pair_coeffs", M)?,
                    need(&self.cubic_pair_coeffs, "cubic_pair_coeffs", M)?,
                )?;
                let parametrization = PairedParametrization {
                    xs: need(&self.xs, "xs", M)?,
                    ys: need(&self.ys, "ys", M)?,
                };
                Ok(Model::paired(equation, parametrization)?)
            }
        }
    }

    pub fn pipeline_config(&self) -> Result<PipelineConfig, ConfigError> {
        let mut config = PipelineConfig::new(self.model()?);
        config.search_height = self.search_height;
        config.family_size = self.family_size;
        config.max_search_seeds = self.max_search_seeds;
        config.seed_points = self.seeds.clone();
        config.shift = self.shift.clone();
        config.combine_seeds = self.combine_seeds;
        if let Some(bound) = self.trial_bound {
            config.budget = FactorBudget { trial_bound: bound, ..FactorBudget::default() };
        }
        config.validate().map_err(|e| ConfigError::Invalid(e.to_string()))?;
        Ok(config)
    }
}
