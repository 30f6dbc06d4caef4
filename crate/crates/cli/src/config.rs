use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::angle::parse_angle;

/// Every key accepted in a config file, spelled like the long flag.
const KNOWN_KEYS: &[&str] = &[
    "walk",
    "gamma",
    "init",
    "t",
    "t-max",
    "xi",
    "kappa",
    "tol",
    "theta-points",
    "phi-points",
    "theta",
    "phi",
    "grid-points",
    "t-list",
    "orders",
    "momentum-points",
    "quad-points",
];

/// `key = value` lines; `#` starts a comment, `_` and `-` are interchangeable in keys.
#[derive(Debug, Default, Clone)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected key=value", n + 1))?;
            let key = k.trim().replace('_', "-");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                bail!("line {}: unknown key {key:?}", n + 1);
            }
            values.insert(key, v.trim().to_string());
        }
        Ok(Self { values })
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

/// Resolves each setting from flag, then config file, then default, and
/// records the effective value for the manifest.
pub struct Settings<'a> {
    config: &'a Config,
    effective: Map<String, Value>,
}

impl<'a> Settings<'a> {
    pub fn new(config: &'a Config) -> Self {
        Self {
            config,
            effective: Map::new(),
        }
    }

    pub fn get<T>(&mut self, key: &str, flag: Option<T>, default: T) -> Result<T>
    where
        T: FromStr + Serialize,
        T::Err: Display,
    {
        let value = match (flag, self.config.raw(key)) {
            (Some(v), _) => v,
            (None, Some(raw)) => raw.parse().map_err(|e| anyhow!("config key {key}: {e}"))?,
            (None, None) => default,
        };
        self.record(key, &value);
        Ok(value)
    }

    /// Optional setting with no default.
    pub fn optional<T>(&mut self, key: &str, flag: Option<T>) -> Result<Option<T>>
    where
        T: FromStr + Serialize,
        T::Err: Display,
    {
        let value = match (flag, self.config.raw(key)) {
            (Some(v), _) => Some(v),
            (None, Some(raw)) => Some(raw.parse().map_err(|e| anyhow!("config key {key}: {e}"))?),
            (None, None) => None,
        };
        if let Some(v) = &value {
            self.record(key, v);
        }
        Ok(value)
    }

    /// Angle setting; the manifest keeps both the spelling and the value.
    pub fn angle(&mut self, key: &str, flag: Option<String>, default: &str) -> Result<f64> {
        let raw = self.get(key, flag, default.to_string())?;
        let value = parse_angle(&raw).with_context(|| format!("--{key}"))?;
        self.record(&format!("{key}-radians"), &value);
        Ok(value)
    }

    pub fn optional_angle(&mut self, key: &str, flag: Option<String>) -> Result<Option<f64>> {
        match self.optional(key, flag)? {
            Some(raw) => {
                let value = parse_angle(&raw).with_context(|| format!("--{key}"))?;
                self.record(&format!("{key}-radians"), &value);
                Ok(Some(value))
            }
            None => Ok(None),
        }
    }

    pub fn record<T: Serialize>(&mut self, key: &str, value: &T) {
        self.effective
            .insert(key.to_string(), serde_json::to_value(value).unwrap_or(Value::Null));
    }

    pub fn into_params(self) -> Value {
        Value::Object(self.effective)
    }
}
