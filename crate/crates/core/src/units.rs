//! Scalar semantics shared across the workspace: linear power ratios,
//! bandwidth-normalized rates, noise-normalized energies, the capacity
//! function, and dB conversion at the I/O boundary.
//!
//! Every SNR-like quantity is carried in linear scale internally; decibels
//! appear only when parsing inputs or rendering outputs.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// `log2(1 + x)` via `ln_1p`, accurate for small `x`.
#[inline]
pub(crate) fn log2_1p(x: f64) -> f64 {
    x.ln_1p() / LN_2
}

/// Dimensionless linear power ratio (an SNR such as gamma_s, gamma_p or
/// beta_p). Non-negative and finite by construction.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LinearSnr(f64);

impl LinearSnr {
    pub const ZERO: Self = Self(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::domain(
                "linear SNR",
                "non-negative and finite",
                value,
            ))
        }
    }

    #[inline]
    pub(crate) fn from_raw(value: f64) -> Self {
        debug_assert!(
            value.is_finite() && value >= 0.0,
            "invalid LinearSnr: {value}"
        );
        Self(value)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Shorthand for [`db_to_linear`].
    pub fn from_db(db: f64) -> Result<Self> {
        db_to_linear(db)
    }

    /// Shorthand for [`linear_to_db`].
    pub fn to_db(self) -> Result<f64> {
        linear_to_db(self)
    }
}

/// Data rate in bps/Hz (bandwidth normalized to 1 Hz). Non-negative and
/// finite by construction.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Rate(f64);

impl Rate {
    pub const ZERO: Self = Self(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::domain(
                "rate [bps/Hz]",
                "non-negative and finite",
                value,
            ))
        }
    }

    #[inline]
    pub(crate) fn from_raw(value: f64) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0, "invalid Rate: {value}");
        Self(value)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Noise-normalized energy, dimensionless. Non-negative and finite by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Energy(f64);

impl Energy {
    pub const ZERO: Self = Self(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::domain(
                "normalized energy",
                "non-negative and finite",
                value,
            ))
        }
    }

    #[inline]
    pub(crate) fn from_raw(value: f64) -> Self {
        debug_assert!(value.is_finite() && value >= 0.0, "invalid Energy: {value}");
        Self(value)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Capacity of a Gaussian channel at SNR `x`: `C(x) = log2(1 + x)` in bps/Hz.
///
/// Strictly increasing and concave; `capacity(0) = 0`.
pub fn capacity(x: LinearSnr) -> Rate {
    Rate::from_raw(log2_1p(x.value()))
}

/// Convert a decibel value to a linear ratio, `10^(db/10)`.
pub fn db_to_linear(db: f64) -> Result<LinearSnr> {
    if !db.is_finite() {
        return Err(Error::domain("dB value", "finite", db));
    }
    LinearSnr::new(10f64.powf(db / 10.0))
}

/// Convert a linear ratio to decibels. The ratio must be strictly positive.
pub fn linear_to_db(x: LinearSnr) -> Result<f64> {
    if x.value() <= 0.0 {
        return Err(Error::domain(
            "linear ratio",
            "strictly positive for dB conversion",
            x.value(),
        ));
    }
    Ok(10.0 * x.value().log10())
}
