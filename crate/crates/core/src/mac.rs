//! Two-user multiple-access rate region at the secondary receiver, and the
//! superposition-coding construction that reaches its dominant face without
//! time sharing.
//!
//! The receiver sees the secondary signal at SNR `gamma_s` and the primary at
//! `gamma_p`. Jointly decodable rate pairs form the pentagon
//!
//! ```text
//! R_s <= C(gamma_s),  R_p <= C(gamma_p),  R_s + R_p <= C(gamma_s + gamma_p)
//! ```
//!
//! `L_s` is the corner where the secondary is decoded last (after the primary
//! has been cancelled), `L_p` the corner where the primary is decoded last.
//! Points strictly between the corners are reached by splitting the secondary
//! signal into two layers: the first decoded against the primary plus the
//! second layer, then the primary, then the second layer clean.

use crate::error::{Error, Result};
use crate::units::{log2_1p, LinearSnr, Rate};

/// A point `(R_s, R_p)` in the two-user rate plane, bps/Hz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePair {
    pub r_s: Rate,
    pub r_p: Rate,
}

/// Power split of the secondary signal into two superposed layers.
///
/// A fraction `1 - alpha` of the secondary power carries the layer decoded
/// before the primary (rate `r1`); the remaining `alpha` carries the layer
/// decoded after the primary has been cancelled (rate `r2`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionSplit {
    pub alpha: f64,
    pub r1: Rate,
    pub r2: Rate,
}

impl SuperpositionSplit {
    /// Total secondary rate `r1 + r2`.
    pub fn total_rate(&self) -> Rate {
        Rate::from_raw(self.r1.value() + self.r2.value())
    }
}

/// Corner points `(L_s, L_p)` of the rate region.
///
/// `L_s = (C(gamma_s), C(gamma_p / (1 + gamma_s)))`,
/// `L_p = (C(gamma_s / (1 + gamma_p)), C(gamma_p))`.
pub fn corner_points(gamma_s: LinearSnr, gamma_p: LinearSnr) -> (RatePair, RatePair) {
    let gs = gamma_s.value();
    let gp = gamma_p.value();
    let l_s = RatePair {
        r_s: Rate::from_raw(log2_1p(gs)),
        r_p: Rate::from_raw(log2_1p(gp / (1.0 + gs))),
    };
    let l_p = RatePair {
        r_s: Rate::from_raw(log2_1p(gs / (1.0 + gp))),
        r_p: Rate::from_raw(log2_1p(gp)),
    };
    (l_s, l_p)
}

/// Whether `pair` lies inside the region, with each of the three constraints
/// slackened by `tol`.
pub fn region_contains(pair: &RatePair, gamma_s: LinearSnr, gamma_p: LinearSnr, tol: f64) -> bool {
    let gs = gamma_s.value();
    let gp = gamma_p.value();
    let rs = pair.r_s.value();
    let rp = pair.r_p.value();
    rs <= log2_1p(gs) + tol && rp <= log2_1p(gp) + tol && rs + rp <= log2_1p(gs + gp) + tol
}

/// Split the secondary signal so that the primary's rate `C(beta_p)` stays
/// decodable in the middle decoding step.
///
/// The split coefficient is `alpha = (gamma_p/beta_p - 1) / gamma_s`, which
/// pins the interference seen by the primary so that
/// `gamma_p / (1 + alpha * gamma_s) = beta_p` exactly. Layer rates:
/// `r1 = C((1-alpha) gamma_s / (1 + gamma_p + alpha gamma_s))`,
/// `r2 = C(alpha * gamma_s)`.
///
/// Valid only when the primary is decodable (`beta_p <= gamma_p`) and the
/// secondary SNR is at or above the clean-decode limit
/// (`gamma_s >= gamma_p/beta_p - 1`, the boundary yielding `alpha = 1`).
/// `gamma_s = 0` is rejected: the coefficient would be 0/0 and a silent
/// secondary carries no rate anyway.
pub fn superposition_split(
    gamma_s: LinearSnr,
    gamma_p: LinearSnr,
    beta_p: LinearSnr,
) -> Result<SuperpositionSplit> {
    let gs = gamma_s.value();
    let gp = gamma_p.value();
    let bp = beta_p.value();
    if bp > gp {
        return Err(Error::Regime(format!(
            "beta_p <= gamma_p violated: beta_p = {bp}, gamma_p = {gp} (primary undecodable)"
        )));
    }
    if gs <= 0.0 {
        return Err(Error::Regime(format!(
            "gamma_s > 0 violated: gamma_s = {gs}"
        )));
    }
    let limit = gp / bp - 1.0;
    if gs < limit {
        return Err(Error::Regime(format!(
            "gamma_s >= gamma_p/beta_p - 1 violated: gamma_s = {gs}, \
             gamma_p/beta_p - 1 = {limit} (clean decoding applies)"
        )));
    }
    let alpha = (limit / gs).clamp(0.0, 1.0);
    let r1 = Rate::from_raw(log2_1p((1.0 - alpha) * gs / (1.0 + gp + alpha * gs)));
    let r2 = Rate::from_raw(log2_1p(alpha * gs));
    Ok(SuperpositionSplit { alpha, r1, r2 })
}

/// Residual `|r1 + C(beta_p) + r2 - C(gamma_s + gamma_p)|` of the sum-rate
/// identity; zero up to rounding for every valid split.
pub fn sum_rate_identity_check(
    gamma_s: LinearSnr,
    gamma_p: LinearSnr,
    beta_p: LinearSnr,
) -> Result<Rate> {
    let split = superposition_split(gamma_s, gamma_p, beta_p)?;
    let primary = log2_1p(beta_p.value());
    let joint = log2_1p(gamma_s.value() + gamma_p.value());
    let residual = (split.r1.value() + primary + split.r2.value() - joint).abs();
    Ok(Rate::from_raw(residual))
}
