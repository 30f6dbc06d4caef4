use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

/// Round-trip float formatting: 17 significant digits.
pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `header` and `rows` and returns the number of data rows.
pub fn write_csv<I>(path: &Path, header: &[&str], rows: I) -> Result<usize>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    w.write_record(header)?;
    let mut n = 0;
    for row in rows {
        w.write_record(&row)?;
        n += 1;
    }
    w.flush()?;
    Ok(n)
}

/// `results.csv` → `results.manifest.json`.
pub fn default_manifest_path(data: &Path) -> PathBuf {
    data.with_extension("manifest.json")
}

#[derive(Debug, Serialize)]
pub struct OutputFile {
    pub path: String,
    pub rows: usize,
}

#[derive(Debug, Serialize)]
pub struct Manifest {
    pub command: String,
    pub params: Value,
    pub norm_residual: f64,
    pub wall_time_ms: f64,
    pub version: String,
    pub outputs: Vec<OutputFile>,
    pub results: Value,
}

impl Manifest {
    pub fn new(command: &str, params: Value, started: Instant) -> Self {
        Self {
            command: command.to_string(),
            params,
            norm_residual: 0.0,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
            version: env!("CARGO_PKG_VERSION").to_string(),
            outputs: Vec::new(),
            results: Value::Null,
        }
    }

    pub fn output(mut self, path: &Path, rows: usize) -> Self {
        self.outputs.push(OutputFile {
            path: path.display().to_string(),
            rows,
        });
        self
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_round_trips() {
        for v in [0.1, 1.0 / 3.0, 1e-300, 0.0, -2.5e7] {
            assert_eq!(float(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(float(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn manifest_path() {
        assert_eq!(default_manifest_path(Path::new("a/p.csv")), PathBuf::from("a/p.manifest.json"));
    }
}
