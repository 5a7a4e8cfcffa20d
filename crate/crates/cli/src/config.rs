//! `key = value` run files. Keys are the long flag names without the leading
//! dashes; `_` and `-` are interchangeable. `#` starts a comment.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;

use crate::error::{CliError, Result};

pub const KEYS: &[&str] = &[
    "a",
    "cplus",
    "theta",
    "tmsv-r",
    "omega-c",
    "model",
    "spectrum-file",
    "dynamics",
    "strategy",
    "n",
    "n-min",
    "n-max",
    "n-per-decade",
    "big-t",
    "t-max",
    "steps",
    "k",
    "out",
];

#[derive(Debug, Default)]
pub struct FileConfig {
    path: String,
    entries: BTreeMap<String, (String, usize)>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&path.display().to_string(), &text)
    }

    pub fn parse(path: &str, text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::config(format!("{path}:{line_no}: expected `key = value`, got `{line}`")))?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::config(format!("{path}:{line_no}: unknown key `{key}`")));
            }
            if value.is_empty() {
                return Err(CliError::config(format!("{path}:{line_no}: empty value for `{key}`")));
            }
            if let Some((_, first)) = entries.insert(key.clone(), (value.to_string(), line_no)) {
                return Err(CliError::config(format!(
                    "{path}:{line_no}: duplicate key `{key}` (first set on line {first})"
                )));
            }
        }
        Ok(Self { path: path.to_string(), entries })
    }

    fn raw(&self, key: &str) -> Option<&(String, usize)> {
        debug_assert!(KEYS.contains(&key), "unregistered key {key}");
        self.entries.get(key)
    }

    pub fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.raw(key)
            .map(|(v, line)| {
                v.parse::<T>().map_err(|e| {
                    CliError::config(format!("{}:{line}: invalid value `{v}` for `{key}`: {e}", self.path))
                })
            })
            .transpose()
    }

    pub fn choice<T: ValueEnum>(&self, key: &str) -> Result<Option<T>> {
        self.raw(key)
            .map(|(v, line)| {
                T::from_str(v, true).map_err(|e| {
                    CliError::config(format!("{}:{line}: invalid value `{v}` for `{key}`: {e}", self.path))
                })
            })
            .transpose()
    }
}
