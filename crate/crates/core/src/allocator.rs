//! Energy allocation across parallel channels: conventional water-filling,
//! intercepted water-filling for channels whose rate function carries a
//! cancellation kink, and a greedy steepest-ascent oracle for verification.
//!
//! Each channel is pictured as a column of stone blocks. An undecodable
//! primary gives a single block of height `nu * (1 + gamma_p)`; a decodable
//! one gives a lower block of height `nu`, a basin of capacity
//! `nu * (gamma_p/beta_p - 1)` above it, and an upper block of height
//! `nu * gamma_p` suspended over the basin. Water poured at level `L` fills
//! the basin first, stalls while `L` crosses the upper block (the kink
//! plateau of the rate function, where the marginal rate drops by the factor
//! `1 + beta_p`), and then rises above it. The marginal rate at level `L` is
//! `1 / (L * ln 2)` on every channel, so the optimal allocation equalizes
//! levels: a dual bisection on the marginal handles the non-differentiable
//! objective exactly, with channels whose marginal jump straddles the dual
//! value parked on their kink.

use std::f64::consts::LN_2;

use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::oic::rate_oic_raw;
use crate::units::{log2_1p, Energy, Rate};

/// Stone-block levels of one channel.
///
/// `lower_top <= gap_top <= upper_top`; the basin between `lower_top` and
/// `gap_top` holds the clean-decode energy, and the block heights always sum
/// to `nu * (1 + gamma_p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockGeometry {
    pub lower_top: f64,
    pub gap_top: f64,
    pub upper_top: f64,
}

impl BlockGeometry {
    /// Basin capacity `gap_top - lower_top`, the kink energy of the channel.
    pub fn cap(&self) -> f64 {
        self.gap_top - self.lower_top
    }

    /// Combined height of the stone blocks, `nu * (1 + gamma_p)`.
    pub fn total_block_height(&self) -> f64 {
        self.lower_top + (self.upper_top - self.gap_top)
    }

    /// Energy held by this channel when the water stands at `level`.
    pub fn energy_at_level(&self, level: f64) -> f64 {
        match self.segment_at(level) {
            Segment::Zero => 0.0,
            Segment::Basin => level - self.lower_top,
            Segment::Plateau => self.cap(),
            Segment::Above => self.cap() + (level - self.upper_top),
        }
    }

    fn segment_at(&self, level: f64) -> Segment {
        if level <= self.lower_top {
            Segment::Zero
        } else if level <= self.gap_top {
            Segment::Basin
        } else if level <= self.upper_top {
            Segment::Plateau
        } else {
            Segment::Above
        }
    }
}

/// Where the water level sits relative to one channel's blocks.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Segment {
    Zero,
    Basin,
    Plateau,
    Above,
}

/// Block levels for one channel.
pub fn blocks_for_channel(params: &ChannelParams) -> BlockGeometry {
    let nu = params.nu();
    let gp = params.gamma_p().value();
    if params.primary_decodable() {
        let gap_top = nu * gp / params.beta_p().value();
        BlockGeometry {
            lower_top: nu,
            gap_top,
            upper_top: gap_top + nu * gp,
        }
    } else {
        let top = nu * (1.0 + gp);
        BlockGeometry {
            lower_top: top,
            gap_top: top,
            upper_top: top,
        }
    }
}

/// Result of an energy allocation.
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationResult {
    /// Energy per channel; sums to the requested total.
    pub energies: Vec<Energy>,
    /// Rate per channel at the allocated energy.
    pub per_channel_rates: Vec<Rate>,
    /// Sum of the per-channel rates.
    pub sum_rate: Rate,
    /// Dual value: common marginal rate per unit energy at the optimum.
    /// Channels parked on a kink hold it inside their marginal jump.
    pub water_marginal: f64,
}

/// Rate of one channel as a function of the energy spent on it:
/// `rate_oic(e / nu)`. Concave, continuous, with its branch switch at the
/// kink energy `nu * (gamma_p/beta_p - 1)` where it equals
/// `log2(gamma_p/beta_p)`.
pub fn channel_rate(e: Energy, params: &ChannelParams) -> Rate {
    Rate::from_raw(channel_rate_raw(e.value(), params))
}

#[inline]
pub(crate) fn channel_rate_raw(e: f64, params: &ChannelParams) -> f64 {
    rate_oic_raw(e / params.nu(), params)
}

/// Classic water-filling over channels with noise levels `noise_levels`:
/// maximizes `sum_m C(e_m / n_m)` subject to `e_m >= 0`,
/// `sum e_m = total`. Exact active-set solution.
///
/// Used directly for interference-free channels, and as the no-cancellation
/// baseline by passing the effective noises `nu_m * (1 + gamma_p_m)`.
pub fn allocate_conventional(total: Energy, noise_levels: &[f64]) -> Result<AllocationResult> {
    if noise_levels.is_empty() {
        return Err(Error::NoChannels);
    }
    for &n in noise_levels {
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::domain(
                "noise level",
                "strictly positive and finite",
                n,
            ));
        }
    }
    let t = total.value();
    let m = noise_levels.len();
    let mut active = vec![true; m];
    let level = loop {
        let count = active.iter().filter(|&&a| a).count();
        let noise_sum: f64 = noise_levels
            .iter()
            .zip(&active)
            .filter(|(_, &a)| a)
            .map(|(&n, _)| n)
            .sum();
        let level = (t + noise_sum) / count as f64;
        let mut dropped = false;
        for (i, &n) in noise_levels.iter().enumerate() {
            if active[i] && n >= level {
                active[i] = false;
                dropped = true;
            }
        }
        if !dropped {
            break level;
        }
        if active.iter().all(|&a| !a) {
            // all noises equal and t = 0; level = min noise
            break noise_levels.iter().cloned().fold(f64::INFINITY, f64::min);
        }
    };

    let energies: Vec<f64> = noise_levels
        .iter()
        .zip(&active)
        .map(|(&n, &a)| if a { level - n } else { 0.0 })
        .collect();
    let rates: Vec<f64> = noise_levels
        .iter()
        .zip(&energies)
        .map(|(&n, &e)| log2_1p(e / n))
        .collect();
    let sum_rate = rates.iter().sum();
    Ok(AllocationResult {
        energies: energies.into_iter().map(Energy::from_raw).collect(),
        per_channel_rates: rates.into_iter().map(Rate::from_raw).collect(),
        sum_rate: Rate::from_raw(sum_rate),
        water_marginal: 1.0 / (level * LN_2),
    })
}

/// Intercepted water-filling: maximizes `sum_m channel_rate(e_m)` subject to
/// `e_m >= 0`, `sum e_m = total`.
///
/// Dual bisection on the marginal value `lambda`: the water level implied by
/// `lambda` is `1 / (lambda * ln 2)`, each channel responds with
/// [`BlockGeometry::energy_at_level`], and the total response is monotone in
/// `lambda`. When the level clears every upper block the allocation
/// coincides with conventional water-filling over the effective noises
/// `nu_m * (1 + gamma_p_m)`.
pub fn allocate_intercepted(total: Energy, channels: &[ChannelParams]) -> Result<AllocationResult> {
    if channels.is_empty() {
        return Err(Error::NoChannels);
    }
    let t = total.value();
    let blocks: Vec<BlockGeometry> = channels.iter().map(blocks_for_channel).collect();

    if t == 0.0 {
        let marginal = blocks
            .iter()
            .map(|b| 1.0 / (b.lower_top * LN_2))
            .fold(f64::NEG_INFINITY, f64::max);
        return Ok(result_from_energies(
            vec![0.0; channels.len()],
            channels,
            marginal,
        ));
    }

    // brackets: at lambda_hi the level sits at the lowest floor (no water
    // anywhere), at lambda_lo every channel could absorb the whole budget
    let lambda_hi = channels
        .iter()
        .map(|c| 1.0 / (c.nu() * LN_2))
        .fold(f64::NEG_INFINITY, f64::max);
    let lambda_lo = channels
        .iter()
        .map(|c| 1.0 / ((c.nu() * (1.0 + c.gamma_p().value()) + t) * LN_2))
        .fold(f64::INFINITY, f64::min);

    let response = |lambda: f64| -> f64 {
        let level = 1.0 / (lambda * LN_2);
        blocks.iter().map(|b| b.energy_at_level(level)).sum()
    };

    let mut lo = lambda_lo;
    let mut hi = lambda_hi;
    let mut lambda = 0.5 * (lo + hi);
    for _ in 0..200 {
        lambda = 0.5 * (lo + hi);
        let s = response(lambda);
        if (s - t).abs() <= 1e-12 * t {
            break;
        }
        if s > t {
            lo = lambda;
        } else {
            hi = lambda;
        }
    }

    // Exact refinement: the bisection has pinned each channel to a segment;
    // with the segments fixed the common level solves in closed form. Kept
    // only if the exact level lands in the same segments.
    let level = 1.0 / (lambda * LN_2);
    let segments: Vec<Segment> = blocks.iter().map(|b| b.segment_at(level)).collect();
    let mut filling = 0usize;
    let mut terms = 0.0;
    for (b, seg) in blocks.iter().zip(&segments) {
        match seg {
            Segment::Zero => {}
            Segment::Basin => {
                terms += b.lower_top;
                filling += 1;
            }
            Segment::Plateau => terms -= b.cap(),
            Segment::Above => {
                terms += b.upper_top - b.cap();
                filling += 1;
            }
        }
    }
    let refined = (filling > 0)
        .then(|| (t + terms) / filling as f64)
        .filter(|&l| {
            blocks
                .iter()
                .zip(&segments)
                .all(|(b, seg)| b.segment_at(l) == *seg)
        });

    let (energies, lambda) = match refined {
        Some(l) => {
            let energies = blocks.iter().map(|b| b.energy_at_level(l)).collect();
            (energies, 1.0 / (l * LN_2))
        }
        None => {
            // razor-edge segment flip; keep the bisected solution, rescaled
            // onto the budget
            let mut energies: Vec<f64> = blocks.iter().map(|b| b.energy_at_level(level)).collect();
            let sum: f64 = energies.iter().sum();
            if sum > 0.0 {
                let scale = t / sum;
                for e in &mut energies {
                    *e *= scale;
                }
            }
            (energies, lambda)
        }
    };
    Ok(result_from_energies(energies, channels, lambda))
}

/// Greedy steepest-ascent oracle: split `total` into `steps` equal quanta and
/// repeatedly hand the next quantum to the channel with the largest rate
/// increase. Exact for the separable concave objective up to discretization,
/// and independent of [`allocate_intercepted`]'s solution path.
pub fn oracle_allocate(
    total: Energy,
    channels: &[ChannelParams],
    steps: usize,
) -> Result<AllocationResult> {
    const MIN_STEPS: usize = 1000;
    if steps < MIN_STEPS {
        return Err(Error::TooFewSteps {
            min: MIN_STEPS,
            got: steps,
        });
    }
    if channels.is_empty() {
        return Err(Error::NoChannels);
    }
    let t = total.value();
    let m = channels.len();
    if t == 0.0 {
        let marginal = channels
            .iter()
            .map(|c| 1.0 / (blocks_for_channel(c).lower_top * LN_2))
            .fold(f64::NEG_INFINITY, f64::max);
        return Ok(result_from_energies(vec![0.0; m], channels, marginal));
    }

    let quantum = t / steps as f64;
    let gain =
        |c: &ChannelParams, e: f64| channel_rate_raw(e + quantum, c) - channel_rate_raw(e, c);

    let mut counts = vec![0u64; m];
    let mut gains: Vec<f64> = channels.iter().map(|c| gain(c, 0.0)).collect();
    for _ in 0..steps {
        let mut best = 0;
        for i in 1..m {
            if gains[i] > gains[best] {
                best = i;
            }
        }
        counts[best] += 1;
        gains[best] = gain(&channels[best], counts[best] as f64 * quantum);
    }

    let energies: Vec<f64> = counts.iter().map(|&c| c as f64 * quantum).collect();
    let marginal = gains.iter().cloned().fold(f64::NEG_INFINITY, f64::max) / quantum;
    Ok(result_from_energies(energies, channels, marginal))
}

fn result_from_energies(
    energies: Vec<f64>,
    channels: &[ChannelParams],
    water_marginal: f64,
) -> AllocationResult {
    let rates: Vec<f64> = energies
        .iter()
        .zip(channels)
        .map(|(&e, c)| channel_rate_raw(e, c))
        .collect();
    let sum_rate = rates.iter().sum();
    AllocationResult {
        energies: energies.into_iter().map(Energy::from_raw).collect(),
        per_channel_rates: rates.into_iter().map(Rate::from_raw).collect(),
        sum_rate: Rate::from_raw(sum_rate),
        water_marginal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::LinearSnr;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn snr(x: f64) -> LinearSnr {
        LinearSnr::new(x).unwrap()
    }

    fn params(nu: f64, gamma_p: f64, beta_p: f64) -> ChannelParams {
        ChannelParams::new(nu, snr(gamma_p), snr(beta_p)).unwrap()
    }

    fn energy(x: f64) -> Energy {
        Energy::new(x).unwrap()
    }

    /// Two channels, nu = 1, gamma_p = 10: channel 1 decodable (beta_p = 5,
    /// basin capacity 1), channel 2 undecodable (beta_p = 20).
    fn canonical_pair() -> Vec<ChannelParams> {
        vec![params(1.0, 10.0, 5.0), params(1.0, 10.0, 20.0)]
    }

    fn energies_of(r: &AllocationResult) -> Vec<f64> {
        r.energies.iter().map(|e| e.value()).collect()
    }

    #[test]
    fn blocks_decodable() {
        let b = blocks_for_channel(&params(1.0, 10.0, 5.0));
        assert_eq!(b.lower_top, 1.0);
        assert_eq!(b.gap_top, 2.0);
        assert_eq!(b.upper_top, 12.0);
        assert_eq!(b.cap(), 1.0);
        assert_eq!(b.total_block_height(), 11.0);
    }

    #[test]
    fn blocks_undecodable() {
        let b = blocks_for_channel(&params(2.0, 4.0, 5.0));
        assert_eq!(b.lower_top, 10.0);
        assert_eq!(b.gap_top, 10.0);
        assert_eq!(b.upper_top, 10.0);
        assert_eq!(b.cap(), 0.0);
        assert_eq!(b.total_block_height(), 10.0);
    }

    #[test]
    fn blocks_zero_width_basin() {
        let b = blocks_for_channel(&params(1.0, 6.0, 6.0));
        assert_eq!(b.lower_top, 1.0);
        assert_eq!(b.gap_top, 1.0);
        assert_eq!(b.upper_top, 7.0);
        assert_eq!(b.cap(), 0.0);
    }

    #[test]
    fn block_heights_match_kink_energy() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let c = params(
                rng.gen_range(0.1..5.0),
                rng.gen_range(0.0..1000.0),
                rng.gen_range(0.1..1000.0),
            );
            let b = blocks_for_channel(&c);
            assert!(b.lower_top <= b.gap_top && b.gap_top <= b.upper_top);
            let expected_height = c.nu() * (1.0 + c.gamma_p().value());
            assert!((b.total_block_height() - expected_height).abs() < 1e-9 * expected_height);
            assert!((b.cap() - c.kink_energy()).abs() < 1e-12 * (1.0 + c.kink_energy()));
        }
    }

    #[test]
    fn channel_rate_reference_points() {
        let c = params(1.0, 10.0, 5.0);
        assert_eq!(channel_rate(Energy::ZERO, &c).value(), 0.0);
        // kink energy is 1; both branches give log2(2) = 1
        assert!((channel_rate(energy(1.0), &c).value() - 1.0).abs() < 1e-12);
        let r = channel_rate(energy(11.0), &c).value();
        assert!((r - (11f64 / 3.0).log2()).abs() < 1e-12, "rate = {r}");
    }

    #[test]
    fn conventional_two_channel_closed_form() {
        let r = allocate_conventional(energy(1.0), &[1.0, 3.0]).unwrap();
        let e = energies_of(&r);
        assert!((e[0] - 1.0).abs() < 1e-12 && e[1] == 0.0, "{e:?}");

        let r = allocate_conventional(energy(4.0), &[1.0, 3.0]).unwrap();
        let e = energies_of(&r);
        assert!(
            (e[0] - 3.0).abs() < 1e-12 && (e[1] - 1.0).abs() < 1e-12,
            "{e:?}"
        );
        assert!((r.water_marginal - 1.0 / (4.0 * LN_2)).abs() < 1e-12);

        let r = allocate_conventional(Energy::ZERO, &[1.0, 3.0]).unwrap();
        assert!(energies_of(&r).iter().all(|&e| e == 0.0));
        assert_eq!(r.sum_rate.value(), 0.0);
    }

    #[test]
    fn conventional_rejects_bad_input() {
        assert_eq!(
            allocate_conventional(energy(1.0), &[]).unwrap_err(),
            Error::NoChannels
        );
        assert!(allocate_conventional(energy(1.0), &[1.0, 0.0]).is_err());
        assert!(allocate_conventional(energy(1.0), &[-2.0]).is_err());
    }

    #[test]
    fn intercepted_canonical_regions() {
        let channels = canonical_pair();
        for (total, expected) in [(0.5, [0.5, 0.0]), (1.5, [1.0, 0.5]), (4.0, [2.0, 2.0])] {
            let r = allocate_intercepted(energy(total), &channels).unwrap();
            let e = energies_of(&r);
            for m in 0..2 {
                assert!(
                    (e[m] - expected[m]).abs() < 1e-6,
                    "total {total}: got {e:?}, expected {expected:?}"
                );
            }
        }
    }

    #[test]
    fn intercepted_three_channel_schedule() {
        // nu = (1, 2, 1.5), gamma_p = (10, 4, 6), beta_p = (5, 4, 3):
        // basin capacities (1, 0, 1.5), floors (1, 1.5) and block tops
        // (12, 10, 12). The piecewise-linear schedule over total energy:
        let channels = vec![
            params(1.0, 10.0, 5.0),
            params(2.0, 4.0, 4.0),
            params(1.5, 6.0, 3.0),
        ];
        let cases: Vec<(f64, [f64; 3])> = vec![
            (0.3, [0.3, 0.0, 0.0]),
            (1.0, [0.75, 0.0, 0.25]),
            (2.0, [1.0, 0.0, 1.0]),
            (3.5, [1.0, 1.0, 1.5]),
            (7.5, [2.0, 3.0, 2.5]),
        ];
        for (total, expected) in cases {
            let r = allocate_intercepted(energy(total), &channels).unwrap();
            let e = energies_of(&r);
            for m in 0..3 {
                assert!(
                    (e[m] - expected[m]).abs() < 1e-6,
                    "total {total}: got {e:?}, expected {expected:?}"
                );
            }
        }
    }

    #[test]
    fn single_channel_reference_instance() {
        // nu = 1, gamma_p = 100, beta_p = 10: at total 5 the budget stays in
        // the clean-decode basin (kink energy 9), so the whole rate is C(5)
        let channel = [params(1.0, 100.0, 10.0)];
        let r = allocate_intercepted(energy(5.0), &channel).unwrap();
        assert!((energies_of(&r)[0] - 5.0).abs() < 1e-12);
        assert!((r.sum_rate.value() - 6f64.log2()).abs() < 1e-12);

        let conv = allocate_conventional(energy(5.0), &[1.0 * 101.0]).unwrap();
        assert!((conv.sum_rate.value() - (106f64 / 101.0).log2()).abs() < 1e-12);
    }

    #[test]
    fn result_rates_are_consistent() {
        let channels = canonical_pair();
        let r = allocate_intercepted(energy(3.0), &channels).unwrap();
        for (m, rate) in r.per_channel_rates.iter().enumerate() {
            assert_eq!(
                rate.value(),
                channel_rate(r.energies[m], &channels[m]).value()
            );
        }
        let sum: f64 = r.per_channel_rates.iter().map(|x| x.value()).sum();
        assert_eq!(r.sum_rate.value(), sum);
    }

    #[test]
    fn intercepted_feasibility_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let m = rng.gen_range(1..=6);
            let channels: Vec<ChannelParams> = (0..m)
                .map(|_| {
                    params(
                        rng.gen_range(0.1..5.0),
                        rng.gen_range(0.0..1000.0),
                        rng.gen_range(0.1..1000.0),
                    )
                })
                .collect();
            let t = rng.gen_range(0.0..50.0);
            let r = allocate_intercepted(energy(t), &channels).unwrap();
            let e = energies_of(&r);
            assert!(e.iter().all(|&x| x >= 0.0));
            let sum: f64 = e.iter().sum();
            assert!(
                (sum - t).abs() <= 1e-9 * t.max(1e-12),
                "sum {sum} vs total {t}"
            );
        }
    }

    #[test]
    fn intercepted_matches_oracle_small_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..25 {
            let m = rng.gen_range(1..=4);
            let channels: Vec<ChannelParams> = (0..m)
                .map(|_| {
                    params(
                        rng.gen_range(0.1..5.0),
                        rng.gen_range(0.0..100.0),
                        rng.gen_range(0.1..100.0),
                    )
                })
                .collect();
            let t = rng.gen_range(0.1..30.0);
            let smart = allocate_intercepted(energy(t), &channels).unwrap();
            let brute = oracle_allocate(energy(t), &channels, 20_000).unwrap();
            assert!(
                smart.sum_rate.value() >= brute.sum_rate.value() - 1e-9,
                "solver below oracle: {} vs {}",
                smart.sum_rate.value(),
                brute.sum_rate.value()
            );
            assert!(
                (smart.sum_rate.value() - brute.sum_rate.value()).abs() < 1e-2,
                "sum rates diverge: {} vs {}",
                smart.sum_rate.value(),
                brute.sum_rate.value()
            );
        }
    }

    #[test]
    fn exchange_stability() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let m = rng.gen_range(2..=5);
            let channels: Vec<ChannelParams> = (0..m)
                .map(|_| {
                    params(
                        rng.gen_range(0.1..5.0),
                        rng.gen_range(0.0..200.0),
                        rng.gen_range(0.1..200.0),
                    )
                })
                .collect();
            let t = rng.gen_range(0.5..40.0);
            let r = allocate_intercepted(energy(t), &channels).unwrap();
            let e = energies_of(&r);
            let base = r.sum_rate.value();
            let delta = 1e-6 * t;
            for i in 0..m {
                for j in 0..m {
                    if i == j || e[i] < delta {
                        continue;
                    }
                    let mut moved = e.clone();
                    moved[i] -= delta;
                    moved[j] += delta;
                    let perturbed: f64 = moved
                        .iter()
                        .zip(&channels)
                        .map(|(&x, c)| channel_rate_raw(x, c))
                        .sum();
                    assert!(
                        perturbed - base <= 1e-12,
                        "moving {delta} from {i} to {j} gains {:e}",
                        perturbed - base
                    );
                }
            }
        }
    }

    #[test]
    fn high_energy_matches_conventional_on_effective_noises() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..40 {
            let m = rng.gen_range(1..=6);
            let channels: Vec<ChannelParams> = (0..m)
                .map(|_| {
                    params(
                        rng.gen_range(0.1..5.0),
                        rng.gen_range(0.0..100.0),
                        rng.gen_range(0.1..100.0),
                    )
                })
                .collect();
            let blocks: Vec<BlockGeometry> = channels.iter().map(blocks_for_channel).collect();
            let top = blocks
                .iter()
                .map(|b| b.upper_top)
                .fold(f64::NEG_INFINITY, f64::max);
            let fill: f64 = blocks.iter().map(|b| b.energy_at_level(top)).sum();
            let t = 10.0 * fill.max(1.0);

            let smart = allocate_intercepted(energy(t), &channels).unwrap();
            let eff: Vec<f64> = channels
                .iter()
                .map(|c| c.nu() * (1.0 + c.gamma_p().value()))
                .collect();
            let conv = allocate_conventional(energy(t), &eff).unwrap();
            for (a, b) in smart.energies.iter().zip(&conv.energies) {
                assert!(
                    (a.value() - b.value()).abs() <= 1e-6 * t,
                    "high-energy mismatch: {} vs {}",
                    a.value(),
                    b.value()
                );
            }
        }
    }

    #[test]
    fn oracle_edge_cases() {
        let channels = canonical_pair();
        let r = oracle_allocate(Energy::ZERO, &channels, 1000).unwrap();
        assert!(energies_of(&r).iter().all(|&e| e == 0.0));
        assert_eq!(r.sum_rate.value(), 0.0);

        let single = vec![params(1.0, 10.0, 5.0)];
        let r = oracle_allocate(energy(7.0), &single, 1000).unwrap();
        assert!((energies_of(&r)[0] - 7.0).abs() < 1e-9);

        let r = oracle_allocate(energy(1.5), &channels, 100_000).unwrap();
        let e = energies_of(&r);
        let band = 2.0 * 1.5 / 100_000.0;
        assert!((e[0] - 1.0).abs() <= band, "{e:?}");
        assert!((e[1] - 0.5).abs() <= band, "{e:?}");

        assert_eq!(
            oracle_allocate(energy(1.0), &channels, 10).unwrap_err(),
            Error::TooFewSteps { min: 1000, got: 10 }
        );
    }

    #[test]
    fn sum_rate_monotone_in_budget() {
        let channels = canonical_pair();
        let mut prev = 0.0;
        for i in 0..50 {
            let t = i as f64 * 0.25;
            let r = allocate_intercepted(energy(t), &channels).unwrap();
            assert!(
                r.sum_rate.value() >= prev - 1e-12,
                "sum rate dropped at total {t}"
            );
            prev = r.sum_rate.value();
        }
    }

    #[test]
    fn dominance_over_noic_baseline() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let m = rng.gen_range(1..=6);
            let channels: Vec<ChannelParams> = (0..m)
                .map(|_| {
                    params(
                        rng.gen_range(0.1..5.0),
                        rng.gen_range(0.0..500.0),
                        rng.gen_range(0.1..500.0),
                    )
                })
                .collect();
            let t = rng.gen_range(0.0..50.0);
            let smart = allocate_intercepted(energy(t), &channels).unwrap();
            let eff: Vec<f64> = channels
                .iter()
                .map(|c| c.nu() * (1.0 + c.gamma_p().value()))
                .collect();
            let conv = allocate_conventional(energy(t), &eff).unwrap();
            assert!(
                smart.sum_rate.value() >= conv.sum_rate.value() - 1e-12,
                "oic sum rate below no-cancellation baseline"
            );
        }
    }
}
