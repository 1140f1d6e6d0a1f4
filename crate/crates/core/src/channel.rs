//! Validated description of one channel as seen by the secondary receiver.

use crate::error::{Error, Result};
use crate::units::{capacity, LinearSnr, Rate};

/// Per-channel parameters: normalized noise energy `nu`, the primary SNR
/// `gamma_p` at the secondary receiver, and the minimum SNR `beta_p` at which
/// the primary's chosen rate is decodable over a single link.
///
/// The noise is fully normalized: spending energy `e` on this channel yields
/// the secondary SNR `e / nu`. Channel gains and raw noise power are never
/// carried separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    nu: f64,
    gamma_p: LinearSnr,
    beta_p: LinearSnr,
}

impl ChannelParams {
    pub fn new(nu: f64, gamma_p: LinearSnr, beta_p: LinearSnr) -> Result<Self> {
        if !(nu.is_finite() && nu > 0.0) {
            return Err(Error::domain(
                "normalized noise energy nu",
                "strictly positive and finite",
                nu,
            ));
        }
        if beta_p.value() <= 0.0 {
            return Err(Error::domain("beta_p", "strictly positive", beta_p.value()));
        }
        Ok(Self {
            nu,
            gamma_p,
            beta_p,
        })
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    #[inline]
    pub fn gamma_p(&self) -> LinearSnr {
        self.gamma_p
    }

    #[inline]
    pub fn beta_p(&self) -> LinearSnr {
        self.beta_p
    }

    /// Rate the primary system transmits at: `R_p = C(beta_p)`.
    pub fn primary_rate(&self) -> Rate {
        capacity(self.beta_p)
    }

    /// Whether the secondary receiver can decode the primary signal
    /// (`gamma_p >= beta_p`).
    #[inline]
    pub fn primary_decodable(&self) -> bool {
        self.gamma_p.value() >= self.beta_p.value()
    }

    /// Largest secondary SNR at which the primary can still be decoded first
    /// and cancelled cleanly: `gamma_p/beta_p - 1`. Zero when the primary is
    /// undecodable.
    pub fn clean_decode_snr_limit(&self) -> f64 {
        if self.primary_decodable() {
            self.gamma_p.value() / self.beta_p.value() - 1.0
        } else {
            0.0
        }
    }

    /// Energy at which the per-channel rate function changes branch:
    /// `nu * (gamma_p/beta_p - 1)`. Zero when the primary is undecodable.
    pub fn kink_energy(&self) -> f64 {
        self.nu * self.clean_decode_snr_limit()
    }
}
