//! Plain-text `key = value` sweep configuration files.
//!
//! Recognized keys: `state`, `qr` (comma-separated), `q_phase`, `points`,
//! `pairs` (comma-separated), `detectors` (comma-separated), `output`.
//! Blank lines and lines starting with `#` are ignored. Command-line flags
//! override file values.

use crate::CliError;

#[derive(Debug, Default, Clone)]
pub struct FileConfig {
    pub state: Option<String>,
    pub qr: Option<Vec<f64>>,
    pub q_phase: Option<f64>,
    pub points: Option<usize>,
    pub pairs: Option<Vec<String>>,
    pub detectors: Option<Vec<String>>,
    pub output: Option<String>,
}

pub fn parse(text: &str) -> Result<FileConfig, CliError> {
    let mut cfg = FileConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Domain(format!(
                "config line {}: expected `key = value`, got `{line}`",
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "state" => cfg.state = Some(value.to_string()),
            "qr" => cfg.qr = Some(parse_f64_list(key, value)?),
            "q_phase" => cfg.q_phase = Some(parse_f64(key, value)?),
            "points" => {
                cfg.points = Some(value.parse().map_err(|_| {
                    CliError::Domain(format!("config key `points`: invalid count `{value}`"))
                })?)
            }
            "pairs" => cfg.pairs = Some(parse_str_list(value)),
            "detectors" => cfg.detectors = Some(parse_str_list(value)),
            "output" => cfg.output = Some(value.to_string()),
            other => {
                return Err(CliError::Domain(format!(
                    "config line {}: unknown key `{other}`",
                    lineno + 1
                )))
            }
        }
    }
    Ok(cfg)
}

fn parse_str_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_f64(key: &str, value: &str) -> Result<f64, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Domain(format!("config key `{key}`: invalid number `{value}`")))
}

fn parse_f64_list(key: &str, value: &str) -> Result<Vec<f64>, CliError> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_f64(key, s))
        .collect()
}
