//! Shared fixtures for the benchmark targets.

use oic_core::{ChannelParams, LinearSnr};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A reproducible set of channels spanning decodable and undecodable
/// primaries.
pub fn sample_channels(count: usize, seed: u64) -> Vec<ChannelParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            ChannelParams::new(
                rng.gen_range(0.1..5.0),
                LinearSnr::new(rng.gen_range(0.0..1000.0)).unwrap(),
                LinearSnr::new(rng.gen_range(0.1..1000.0)).unwrap(),
            )
            .unwrap()
        })
        .collect()
}
