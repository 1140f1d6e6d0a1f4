//! Input parsing: unit-suffixed SNR values, SNR grids, the channels file,
//! and the Monte-Carlo config file.
//!
//! Every SNR-like value must carry a unit suffix, `dB` or `lin`; bare
//! numbers are rejected so that decibel/linear mix-ups cannot slip into a
//! run unnoticed.

use std::path::Path;

use oic_core::{ChannelParams, Energy, LinearSnr, McConfig, MeanBetaP};

use crate::CliError;

/// Parse a unit-suffixed SNR-like value: `20dB`, `-3dB`, `100lin`, `0.5lin`.
/// The suffix is case-insensitive.
pub fn parse_snr(s: &str) -> Result<LinearSnr, CliError> {
    let t = s.trim();
    let lower = t.to_ascii_lowercase();
    if let Some(num) = lower.strip_suffix("db") {
        let db: f64 = num
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("invalid dB value in {t:?}")))?;
        oic_core::db_to_linear(db).map_err(|e| CliError::usage(e.to_string()))
    } else if let Some(num) = lower.strip_suffix("lin") {
        let v: f64 = num
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("invalid linear value in {t:?}")))?;
        LinearSnr::new(v).map_err(|e| CliError::usage(e.to_string()))
    } else {
        Err(CliError::usage(format!(
            "SNR value {t:?} needs a unit suffix `dB` or `lin` (e.g. 20dB, 100lin)"
        )))
    }
}

/// clap adapter for [`parse_snr`].
pub fn snr_arg(s: &str) -> Result<LinearSnr, String> {
    parse_snr(s).map_err(|e| e.to_string())
}

/// An ascending grid of SNR values, parsed from `<start>:<stop>:<count>`
/// where both bounds carry the same unit suffix; the spacing is uniform in
/// that unit (so a dB grid is log-spaced in linear scale).
#[derive(Debug, Clone)]
pub struct SnrGrid {
    pub values: Vec<LinearSnr>,
    /// The grid expression as given, echoed into output metadata.
    pub echo: String,
}

pub fn parse_grid(s: &str) -> Result<SnrGrid, CliError> {
    let malformed = || {
        CliError::usage(format!("malformed grid {s:?}; expected <start>:<stop>:<count> with unit-suffixed bounds, e.g. 0lin:30lin:61"))
    };
    let parts: Vec<&str> = s.split(':').collect();
    let [start_s, stop_s, count_s] = parts.as_slice() else {
        return Err(malformed());
    };
    let count: usize = count_s.trim().parse().map_err(|_| malformed())?;
    if count == 0 {
        return Err(CliError::usage(
            "grid must contain at least one point".into(),
        ));
    }
    let db_grid = start_s.trim().to_ascii_lowercase().ends_with("db");
    if db_grid != stop_s.trim().to_ascii_lowercase().ends_with("db") {
        return Err(CliError::usage(format!(
            "grid bounds in {s:?} must use the same unit suffix"
        )));
    }
    let start = parse_snr(start_s)?;
    let stop = parse_snr(stop_s)?;
    if count > 1 && start.value() >= stop.value() {
        return Err(CliError::usage(format!(
            "grid bounds must be ascending, got start {} >= stop {} (linear)",
            start.value(),
            stop.value()
        )));
    }
    let values = if db_grid {
        let a = start.to_db().map_err(|e| CliError::usage(e.to_string()))?;
        let b = stop.to_db().map_err(|e| CliError::usage(e.to_string()))?;
        linspace(a, b, count)
            .into_iter()
            .map(|d| oic_core::db_to_linear(d).map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<_, _>>()?
    } else {
        linspace(start.value(), stop.value(), count)
            .into_iter()
            .map(|v| LinearSnr::new(v).map_err(|e| CliError::usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    Ok(SnrGrid {
        values,
        echo: s.trim().to_string(),
    })
}

pub fn linspace(a: f64, b: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![a];
    }
    let step = (b - a) / (count - 1) as f64;
    (0..count).map(|i| a + i as f64 * step).collect()
}

/// Load a channels file: one channel per line as `nu gamma_p beta_p`
/// (whitespace or comma separated), every field unit-suffixed, `#` starts a
/// comment.
pub fn load_channels(path: &Path) -> Result<Vec<ChannelParams>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::usage(format!("cannot read channels file {}: {e}", path.display()))
    })?;
    let mut channels = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let [nu_s, gamma_p_s, beta_p_s] = fields.as_slice() else {
            return Err(CliError::usage(format!(
                "channels file line {line_no}: expected 3 fields (nu gamma_p beta_p), got {}",
                fields.len()
            )));
        };
        let at_line = |e: CliError| CliError::usage(format!("channels file line {line_no}: {e}"));
        let nu = parse_snr(nu_s).map_err(at_line)?;
        let gamma_p = parse_snr(gamma_p_s).map_err(at_line)?;
        let beta_p = parse_snr(beta_p_s).map_err(at_line)?;
        let params = ChannelParams::new(nu.value(), gamma_p, beta_p)
            .map_err(|e| CliError::usage(format!("channels file line {line_no}: {e}")))?;
        channels.push(params);
    }
    if channels.is_empty() {
        return Err(CliError::usage(format!(
            "channels file {} defines no channels",
            path.display()
        )));
    }
    Ok(channels)
}

/// Load a Monte-Carlo config: flat `key = value` lines, `#` comments.
///
/// Keys: `channels`, `mean_gamma_p` (suffixed SNR), `mean_beta_p` (suffixed
/// SNR or `inf` for never-decodable mode), `iterations`, `energy_grid`
/// (comma-separated energies), `seed`. All keys are required; `seed` in
/// particular, because reproducibility is mandatory.
pub fn load_mc_config(path: &Path) -> Result<McConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read config file {}: {e}", path.display())))?;

    let mut channels = None;
    let mut mean_gamma_p = None;
    let mut mean_beta_p = None;
    let mut iterations = None;
    let mut energy_grid = None;
    let mut seed = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::usage(format!(
                "config line {line_no}: expected key = value, got {line:?}"
            )));
        };
        let key = key.trim();
        let value = value.trim();
        let bad = |what: &str| {
            CliError::usage(format!("config line {line_no}: invalid {what}: {value:?}"))
        };
        match key {
            "channels" => {
                channels = Some(value.parse::<usize>().map_err(|_| bad("channel count"))?)
            }
            "mean_gamma_p" => mean_gamma_p = Some(parse_snr(value)?),
            "mean_beta_p" => {
                mean_beta_p = Some(if value.eq_ignore_ascii_case("inf") {
                    MeanBetaP::NeverDecodable
                } else {
                    MeanBetaP::Exponential(parse_snr(value)?)
                })
            }
            "iterations" => {
                iterations = Some(value.parse::<usize>().map_err(|_| bad("iteration count"))?)
            }
            "energy_grid" => {
                let grid: Result<Vec<Energy>, CliError> = value
                    .split(',')
                    .map(|v| {
                        let x: f64 = v.trim().parse().map_err(|_| bad("energy value"))?;
                        Energy::new(x).map_err(|e| CliError::usage(e.to_string()))
                    })
                    .collect();
                energy_grid = Some(grid?);
            }
            "seed" => seed = Some(value.parse::<u64>().map_err(|_| bad("seed"))?),
            other => {
                return Err(CliError::usage(format!(
                    "config line {line_no}: unknown key {other:?}"
                )))
            }
        }
    }

    let missing = |k: &str| CliError::usage(format!("config is missing required key `{k}`"));
    Ok(McConfig {
        channels: channels.ok_or_else(|| missing("channels"))?,
        mean_gamma_p: mean_gamma_p.ok_or_else(|| missing("mean_gamma_p"))?,
        mean_beta_p: mean_beta_p.ok_or_else(|| missing("mean_beta_p"))?,
        iterations: iterations.ok_or_else(|| missing("iterations"))?,
        energy_grid: energy_grid.ok_or_else(|| missing("energy_grid"))?,
        seed: seed.ok_or_else(|| missing("seed"))?,
    })
}
