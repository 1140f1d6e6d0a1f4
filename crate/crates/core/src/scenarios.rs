//! Reproducible numerical studies: rate versus distance from the primary
//! transmitter, the required-power gap for a target rate, and seeded
//! Monte-Carlo averages over randomly drawn multi-channel instances.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};
use rayon::prelude::*;

use crate::allocator::{allocate_conventional, allocate_intercepted};
use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::oic::{classify, rate_noic, rate_oic, required_snr_noic, required_snr_oic, Regime};
use crate::units::{linear_to_db, Energy, LinearSnr, Rate};

/// Primary SNR at normalized distance `x` from the primary transmitter,
/// when the primary aims for SNR `beta_p` at its cell edge (`x = 1`):
/// `gamma_p(x) = beta_p / x^v` with propagation coefficient `v`.
pub fn gamma_p_at(x: f64, beta_p: LinearSnr, v: f64) -> Result<LinearSnr> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::domain(
            "normalized distance x",
            "strictly positive and finite",
            x,
        ));
    }
    LinearSnr::new(beta_p.value() / x.powf(v))
}

/// A sweep of the secondary receiver along the line from the primary
/// transmitter, at fixed secondary SNR.
#[derive(Debug, Clone)]
pub struct LineScenario {
    pub beta_p: LinearSnr,
    pub v: f64,
    pub gamma_s: LinearSnr,
    pub x_grid: Vec<f64>,
}

impl LineScenario {
    pub fn new(beta_p: LinearSnr, v: f64, gamma_s: LinearSnr, x_grid: Vec<f64>) -> Result<Self> {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::domain(
                "propagation coefficient v",
                "strictly positive and finite",
                v,
            ));
        }
        if beta_p.value() <= 0.0 {
            return Err(Error::domain("beta_p", "strictly positive", beta_p.value()));
        }
        for &x in &x_grid {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::domain(
                    "normalized distance x",
                    "strictly positive and finite",
                    x,
                ));
            }
        }
        Ok(Self {
            beta_p,
            v,
            gamma_s,
            x_grid,
        })
    }

    /// Lower edge of the superposition band: `(1 + gamma_s)^(-1/v)`.
    /// Between this distance and the cell edge `x = 1` the boundary rate
    /// point is reached by superposition coding.
    pub fn superposition_band_start(&self) -> f64 {
        (1.0 + self.gamma_s.value()).powf(-1.0 / self.v)
    }
}

/// One row of the distance sweep.
#[derive(Debug, Clone, Copy)]
pub struct LineRatePoint {
    pub x: f64,
    pub gamma_p: LinearSnr,
    pub rate_noic: Rate,
    pub rate_oic: Rate,
    pub regime: Regime,
}

/// Rates with and without interference cancellation along the line. Beyond
/// the cell edge (`x > 1`) the primary is undecodable and the two rates
/// coincide.
pub fn line_rate_curve(s: &LineScenario) -> Result<Vec<LineRatePoint>> {
    s.x_grid
        .iter()
        .map(|&x| {
            let gamma_p = gamma_p_at(x, s.beta_p, s.v)?;
            let params = ChannelParams::new(1.0, gamma_p, s.beta_p)?;
            Ok(LineRatePoint {
                x,
                gamma_p,
                rate_noic: rate_noic(s.gamma_s, &params),
                rate_oic: rate_oic(s.gamma_s, &params),
                regime: classify(s.gamma_s, &params),
            })
        })
        .collect()
}

/// One row of the required-power study.
#[derive(Debug, Clone, Copy)]
pub struct PowerGapPoint {
    pub x: f64,
    pub gamma_p: LinearSnr,
    /// Required secondary SNR without cancellation, in dB
    /// (`-inf` when the target rate is zero).
    pub required_noic_db: f64,
    /// Required secondary SNR with cancellation, in dB.
    pub required_oic_db: f64,
    /// `required_noic_db - required_oic_db`; zero beyond the cell edge.
    pub gap_db: f64,
    /// Regime the cancellation receiver operates in at its required SNR;
    /// names the branch of the inverse rate function used.
    pub branch: Regime,
}

/// Gap in required transmit power between the no-cancellation and
/// cancellation receivers, per distance.
pub fn power_gap_curve(
    target: Rate,
    beta_p: LinearSnr,
    v: f64,
    x_grid: &[f64],
) -> Result<Vec<PowerGapPoint>> {
    x_grid
        .iter()
        .map(|&x| {
            let gamma_p = gamma_p_at(x, beta_p, v)?;
            let params = ChannelParams::new(1.0, gamma_p, beta_p)?;
            let req_oic = required_snr_oic(target, &params);
            let branch = classify(req_oic, &params);
            if target.value() == 0.0 {
                // zero rate needs zero power either way
                return Ok(PowerGapPoint {
                    x,
                    gamma_p,
                    required_noic_db: f64::NEG_INFINITY,
                    required_oic_db: f64::NEG_INFINITY,
                    gap_db: 0.0,
                    branch,
                });
            }
            let req_noic = required_snr_noic(target, &params);
            let required_noic_db = linear_to_db(req_noic)?;
            let required_oic_db = linear_to_db(req_oic)?;
            Ok(PowerGapPoint {
                x,
                gamma_p,
                required_noic_db,
                required_oic_db,
                gap_db: required_noic_db - required_oic_db,
                branch,
            })
        })
        .collect()
}

/// Mean of the `beta_p` draw in the Monte-Carlo study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanBetaP {
    /// `beta_p` drawn from an exponential with this linear-scale mean.
    Exponential(LinearSnr),
    /// Never-decodable mode: every channel gets `beta_p > gamma_p`, so
    /// cancellation never activates and both curves coincide.
    NeverDecodable,
}

/// Configuration of the Monte-Carlo study.
///
/// Per iteration, for each of `channels` channels: a link gain
/// `gamma_m ~ Exp(mean 1)` sets the noise `nu_m = 1/gamma_m` (so the average
/// secondary SNR per channel is `energy / channels`), and `gamma_p` and
/// `beta_p` are drawn from exponentials with the configured linear-scale
/// means.
#[derive(Debug, Clone)]
pub struct McConfig {
    pub channels: usize,
    pub mean_gamma_p: LinearSnr,
    pub mean_beta_p: MeanBetaP,
    pub iterations: usize,
    pub energy_grid: Vec<Energy>,
    pub seed: u64,
}

/// One averaged row of the Monte-Carlo study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McPoint {
    pub energy: Energy,
    /// `energy / channels`, the average secondary SNR per channel.
    pub avg_snr_per_channel: f64,
    pub avg_sum_rate_oic: f64,
    pub avg_sum_rate_noic: f64,
    /// Average of `sqrt(||E_oic - E_conv||) / energy` (zero for zero energy).
    pub avg_rel_diff_paper: f64,
    /// Average of `||E_oic - E_conv|| / energy` (zero for zero energy).
    pub avg_rel_diff_companion: f64,
}

/// Relative difference between two energy allocation vectors:
/// `(sqrt(||a - b||_2) / total, ||a - b||_2 / total)`.
///
/// The first form divides the square root of the Euclidean norm by the
/// total; the second divides the norm itself. Both are emitted so consumers
/// can pick either normalization.
pub fn energy_diff(e_oic: &[Energy], e_conv: &[Energy], total: Energy) -> Result<(f64, f64)> {
    if e_oic.len() != e_conv.len() {
        return Err(Error::LengthMismatch {
            left: e_oic.len(),
            right: e_conv.len(),
        });
    }
    let t = total.value();
    if t <= 0.0 {
        return Err(Error::domain("total energy", "strictly positive", t));
    }
    let norm = e_oic
        .iter()
        .zip(e_conv)
        .map(|(a, b)| (a.value() - b.value()).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok((norm.sqrt() / t, norm / t))
}

/// Deterministic substream for one iteration: a ChaCha8 stream keyed by
/// `(seed, iteration)`. Iterations are therefore independent of execution
/// order and thread count.
fn iteration_rng(seed: u64, iteration: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&iteration.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn draw_channels(rng: &mut ChaCha8Rng, cfg: &McConfig) -> Result<Vec<ChannelParams>> {
    let unit = Exp::new(1.0).expect("valid rate");
    let gamma_p_dist = Exp::new(1.0 / cfg.mean_gamma_p.value()).expect("valid rate");
    let beta_p_dist = match cfg.mean_beta_p {
        MeanBetaP::Exponential(mean) => Some(Exp::new(1.0 / mean.value()).expect("valid rate")),
        MeanBetaP::NeverDecodable => None,
    };
    (0..cfg.channels)
        .map(|_| {
            let gain = f64::max(unit.sample(rng), f64::MIN_POSITIVE);
            let nu = 1.0 / gain;
            let gamma_p: f64 = gamma_p_dist.sample(rng);
            let beta_p = match &beta_p_dist {
                Some(d) => d.sample(rng).max(f64::MIN_POSITIVE),
                // any value above gamma_p works: the undecodable branch
                // never reads beta_p
                None => 2.0 * gamma_p + 1.0,
            };
            ChannelParams::new(nu, LinearSnr::new(gamma_p)?, LinearSnr::new(beta_p)?)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default)]
struct McSample {
    oic: f64,
    noic: f64,
    rel_paper: f64,
    rel_companion: f64,
}

fn run_iteration(cfg: &McConfig, iteration: u64) -> Result<Vec<McSample>> {
    let mut rng = iteration_rng(cfg.seed, iteration);
    let channels = draw_channels(&mut rng, cfg)?;
    let effective: Vec<f64> = channels
        .iter()
        .map(|c| c.nu() * (1.0 + c.gamma_p().value()))
        .collect();
    cfg.energy_grid
        .iter()
        .map(|&e| {
            if e.value() == 0.0 {
                return Ok(McSample::default());
            }
            let oic = allocate_intercepted(e, &channels)?;
            let conv = allocate_conventional(e, &effective)?;
            let (rel_paper, rel_companion) = energy_diff(&oic.energies, &conv.energies, e)?;
            Ok(McSample {
                oic: oic.sum_rate.value(),
                noic: conv.sum_rate.value(),
                rel_paper,
                rel_companion,
            })
        })
        .collect()
}

/// Run the Monte-Carlo study. Iterations are evaluated in parallel; the
/// per-iteration substreams and an iteration-ordered reduction make the
/// result bit-identical for any thread count.
pub fn mc_run(cfg: &McConfig) -> Result<Vec<McPoint>> {
    if cfg.channels < 1 {
        return Err(Error::NoChannels);
    }
    if cfg.iterations < 1 {
        return Err(Error::domain(
            "iterations",
            "at least 1",
            cfg.iterations as f64,
        ));
    }
    if cfg.mean_gamma_p.value() <= 0.0 {
        return Err(Error::domain(
            "mean_gamma_p",
            "strictly positive",
            cfg.mean_gamma_p.value(),
        ));
    }
    if let MeanBetaP::Exponential(mean) = cfg.mean_beta_p {
        if mean.value() <= 0.0 {
            return Err(Error::domain(
                "mean_beta_p",
                "strictly positive",
                mean.value(),
            ));
        }
    }

    let samples: Vec<Vec<McSample>> = (0..cfg.iterations as u64)
        .into_par_iter()
        .map(|i| run_iteration(cfg, i))
        .collect::<Result<_>>()?;

    let n = cfg.iterations as f64;
    Ok(cfg
        .energy_grid
        .iter()
        .enumerate()
        .map(|(j, &energy)| {
            let mut acc = McSample::default();
            for row in &samples {
                acc.oic += row[j].oic;
                acc.noic += row[j].noic;
                acc.rel_paper += row[j].rel_paper;
                acc.rel_companion += row[j].rel_companion;
            }
            McPoint {
                energy,
                avg_snr_per_channel: energy.value() / cfg.channels as f64,
                avg_sum_rate_oic: acc.oic / n,
                avg_sum_rate_noic: acc.noic / n,
                avg_rel_diff_paper: acc.rel_paper / n,
                avg_rel_diff_companion: acc.rel_companion / n,
            }
        })
        .collect())
}
