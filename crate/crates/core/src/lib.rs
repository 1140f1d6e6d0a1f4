//! Achievable-rate analysis for a secondary (cognitive) radio link operating
//! in spectrum licensed to a primary system.
//!
//! The secondary receiver sees a two-user multiple access channel: its own
//! transmitter plus the primary transmitter, whose rate was chosen without
//! regard for the secondary link. Whenever the primary signal is strong
//! enough to be decoded at the rate it committed to, the secondary receiver
//! can cancel it instead of enduring it as noise. The crate computes what
//! that opportunistic cancellation buys:
//!
//! - [`units`] / [`channel`]: scalar semantics (linear SNRs, bps/Hz rates,
//!   noise-normalized energies) and validated channel descriptions;
//! - [`mac`]: the two-user rate region, its corner points, and the
//!   superposition-coding power split that reaches the region's dominant
//!   face without time sharing;
//! - [`oic`]: the piecewise rate-adaptation function, its regime classifier,
//!   and the inverse mapping from a target rate to the required SNR;
//! - [`allocator`]: energy allocation over parallel channels — conventional
//!   water-filling, intercepted water-filling over the kinked rate
//!   functions, and a greedy oracle for verification;
//! - [`scenarios`]: reproducible numerical studies (distance sweeps,
//!   power-gap curves, seeded Monte-Carlo averages).
//!
//! Everything is a pure function over immutable inputs and safe to call
//! concurrently.

pub mod allocator;
pub mod channel;
pub mod error;
pub mod mac;
pub mod oic;
pub mod scenarios;
pub mod units;

pub use allocator::{
    allocate_conventional, allocate_intercepted, blocks_for_channel, channel_rate, oracle_allocate,
    AllocationResult, BlockGeometry,
};
pub use channel::ChannelParams;
pub use error::{Error, Result};
pub use mac::{
    corner_points, region_contains, sum_rate_identity_check, superposition_split, RatePair,
    SuperpositionSplit,
};
pub use oic::{classify, rate_noic, rate_oic, required_snr_noic, required_snr_oic, Regime};
pub use scenarios::{
    energy_diff, gamma_p_at, line_rate_curve, mc_run, power_gap_curve, LineRatePoint, LineScenario,
    McConfig, McPoint, MeanBetaP, PowerGapPoint,
};
pub use units::{capacity, db_to_linear, linear_to_db, Energy, LinearSnr, Rate};
