//! Opportunistic interference cancellation: regime classification, the
//! piecewise achievable-rate function, and its inverse.
//!
//! Given the primary's received SNR `gamma_p` and its minimum decodable SNR
//! `beta_p`, the secondary rate at secondary SNR `gamma_s` is
//!
//! ```text
//! C(gamma_s / (1 + gamma_p))                      gamma_p <  beta_p
//! C(gamma_s)                                      gamma_p >= beta_p, gamma_s <= gamma_p/beta_p - 1
//! log2((1+gamma_p)/(1+beta_p))
//!     + C(gamma_s / (1 + gamma_p))                gamma_p >= beta_p, gamma_s >  gamma_p/beta_p - 1
//! ```
//!
//! The function is continuous, strictly increasing and concave in `gamma_s`,
//! but not differentiable at `gamma_s = gamma_p/beta_p - 1`: crossing the
//! kink, the marginal rate drops by the factor `1 + beta_p`.

use std::fmt;

use crate::channel::ChannelParams;
use crate::units::{log2_1p, LinearSnr, Rate};

/// How the secondary receiver treats the primary signal at a given
/// operating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `gamma_p < beta_p`: the primary cannot be decoded and is absorbed
    /// into the noise floor.
    UndecodablePrimary,
    /// Decodable primary at low secondary SNR: decode the primary first,
    /// cancel it, then decode the secondary over a clean channel.
    CleanDecode,
    /// Decodable primary at high secondary SNR: superposition coding with
    /// the primary decoded between the two secondary layers.
    Superposition,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::UndecodablePrimary => "UndecodablePrimary",
            Regime::CleanDecode => "CleanDecode",
            Regime::Superposition => "Superposition",
        })
    }
}

pub(crate) fn classify_raw(gamma_s: f64, params: &ChannelParams) -> Regime {
    if !params.primary_decodable() {
        Regime::UndecodablePrimary
    } else if gamma_s <= params.clean_decode_snr_limit() {
        // the kink itself counts as clean decoding; both branches agree there
        Regime::CleanDecode
    } else {
        Regime::Superposition
    }
}

/// Classify the operating point `(gamma_s, params)`.
pub fn classify(gamma_s: LinearSnr, params: &ChannelParams) -> Regime {
    classify_raw(gamma_s.value(), params)
}

/// Constant rate advantage from cancelling a decodable primary:
/// `log2((1 + gamma_p) / (1 + beta_p))`.
pub(crate) fn cancellation_gain(params: &ChannelParams) -> f64 {
    ((1.0 + params.gamma_p().value()) / (1.0 + params.beta_p().value())).log2()
}

pub(crate) fn rate_oic_raw(gamma_s: f64, params: &ChannelParams) -> f64 {
    let gp = params.gamma_p().value();
    match classify_raw(gamma_s, params) {
        Regime::UndecodablePrimary => log2_1p(gamma_s / (1.0 + gp)),
        Regime::CleanDecode => log2_1p(gamma_s),
        Regime::Superposition => cancellation_gain(params) + log2_1p(gamma_s / (1.0 + gp)),
    }
}

/// Achievable secondary rate with opportunistic interference cancellation.
pub fn rate_oic(gamma_s: LinearSnr, params: &ChannelParams) -> Rate {
    Rate::from_raw(rate_oic_raw(gamma_s.value(), params))
}

pub(crate) fn rate_noic_raw(gamma_s: f64, params: &ChannelParams) -> f64 {
    log2_1p(gamma_s / (1.0 + params.gamma_p().value()))
}

/// Baseline rate when the primary is always treated as undecodable noise:
/// `C(gamma_s / (1 + gamma_p))`, independent of `beta_p`.
pub fn rate_noic(gamma_s: LinearSnr, params: &ChannelParams) -> Rate {
    Rate::from_raw(rate_noic_raw(gamma_s.value(), params))
}

/// Secondary SNR needed to reach `target` with opportunistic interference
/// cancellation; the unique inverse of [`rate_oic`] in `gamma_s`.
pub fn required_snr_oic(target: Rate, params: &ChannelParams) -> LinearSnr {
    let t = target.value();
    let gp = params.gamma_p().value();
    if !params.primary_decodable() {
        return LinearSnr::from_raw((1.0 + gp) * (t.exp2() - 1.0));
    }
    let kink_rate = log2_1p(params.clean_decode_snr_limit());
    if t <= kink_rate {
        LinearSnr::from_raw(t.exp2() - 1.0)
    } else {
        LinearSnr::from_raw((1.0 + gp) * ((t - cancellation_gain(params)).exp2() - 1.0))
    }
}

/// Secondary SNR needed to reach `target` without interference cancellation:
/// `(1 + gamma_p) * (2^target - 1)`.
pub fn required_snr_noic(target: Rate, params: &ChannelParams) -> LinearSnr {
    let gp = params.gamma_p().value();
    LinearSnr::from_raw((1.0 + gp) * (target.value().exp2() - 1.0))
}
