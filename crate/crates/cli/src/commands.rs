//! One function per subcommand, each producing the complete CSV document.

use std::path::Path;

use oic_core::{
    allocate_conventional, allocate_intercepted, classify, line_rate_curve, mc_run,
    power_gap_curve, rate_noic, rate_oic, ChannelParams, Energy, LineScenario, LinearSnr,
    MeanBetaP, Rate,
};

use crate::input::{linspace, load_channels, load_mc_config, SnrGrid};
use crate::output::{sig, Csv};
use crate::CliError;

fn usage(e: oic_core::Error) -> CliError {
    CliError::usage(e.to_string())
}

/// `rate-curve`: the rate-adaptation function over a secondary-SNR grid.
pub fn rate_curve(
    gamma_p: LinearSnr,
    beta_p: LinearSnr,
    grid: &SnrGrid,
) -> Result<String, CliError> {
    let params = ChannelParams::new(1.0, gamma_p, beta_p).map_err(usage)?;
    let mut csv = Csv::new(
        "rate-curve",
        &[
            ("gamma_p_linear", sig(gamma_p.value())),
            ("beta_p_linear", sig(beta_p.value())),
            ("grid", grid.echo.clone()),
        ],
    );
    csv.header("gamma_s,rate_oic,rate_noic,regime");
    for &gs in &grid.values {
        csv.row(&[
            sig(gs.value()),
            sig(rate_oic(gs, &params).value()),
            sig(rate_noic(gs, &params).value()),
            classify(gs, &params).to_string(),
        ]);
    }
    Ok(csv.finish())
}

/// `allocate`: intercepted water-filling over a channels file, with the
/// conventional allocation over effective noises alongside. The footer row
/// is `sum,<sum_rate_oic>,<sum_rate_noic>,<water_marginal>`.
pub fn allocate(total: f64, channels_file: &Path) -> Result<String, CliError> {
    let channels = load_channels(channels_file)?;
    let total = Energy::new(total).map_err(usage)?;
    let oic = allocate_intercepted(total, &channels).map_err(usage)?;
    let effective: Vec<f64> = channels
        .iter()
        .map(|c| c.nu() * (1.0 + c.gamma_p().value()))
        .collect();
    let conv = allocate_conventional(total, &effective).map_err(usage)?;

    let mut csv = Csv::new(
        "allocate",
        &[
            ("total_energy", sig(total.value())),
            ("channels_file", channels_file.display().to_string()),
            ("channel_count", channels.len().to_string()),
        ],
    );
    csv.header("channel,nu,gamma_p,beta_p,cap,energy_oic,energy_conventional,rate_oic");
    for (m, c) in channels.iter().enumerate() {
        csv.row(&[
            (m + 1).to_string(),
            sig(c.nu()),
            sig(c.gamma_p().value()),
            sig(c.beta_p().value()),
            sig(c.kink_energy()),
            sig(oic.energies[m].value()),
            sig(conv.energies[m].value()),
            sig(oic.per_channel_rates[m].value()),
        ]);
    }
    csv.row(&[
        "sum".to_string(),
        sig(oic.sum_rate.value()),
        sig(conv.sum_rate.value()),
        sig(oic.water_marginal),
    ]);
    Ok(csv.finish())
}

pub struct LineArgs {
    pub beta_p: LinearSnr,
    pub v: f64,
    pub gamma_s: LinearSnr,
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub target_rate: Option<f64>,
}

fn x_grid(x_min: f64, x_max: f64, points: usize) -> Result<Vec<f64>, CliError> {
    if !(x_min.is_finite() && x_max.is_finite() && x_min > 0.0 && x_min < x_max) {
        return Err(CliError::usage(format!(
            "invalid range: need 0 < x-min < x-max, got {x_min}..{x_max}"
        )));
    }
    if points < 2 {
        return Err(CliError::usage(format!(
            "need at least 2 points, got {points}"
        )));
    }
    Ok(linspace(x_min, x_max, points))
}

/// `line`: rates along the normalized distance from the primary
/// transmitter; with a target rate, the required-power columns are appended.
pub fn line(args: &LineArgs) -> Result<String, CliError> {
    let grid = x_grid(args.x_min, args.x_max, args.points)?;
    let scenario = LineScenario::new(args.beta_p, args.v, args.gamma_s, grid).map_err(usage)?;
    let rows = line_rate_curve(&scenario).map_err(usage)?;

    let mut params: Vec<(&str, String)> = vec![
        ("beta_p_linear", sig(args.beta_p.value())),
        ("v", sig(args.v)),
        ("gamma_s_linear", sig(args.gamma_s.value())),
        ("x_min", sig(args.x_min)),
        ("x_max", sig(args.x_max)),
        ("points", args.points.to_string()),
    ];

    let gaps = match args.target_rate {
        Some(t) => {
            params.push(("target_rate", sig(t)));
            let target = Rate::new(t).map_err(usage)?;
            Some(power_gap_curve(target, args.beta_p, args.v, &scenario.x_grid).map_err(usage)?)
        }
        None => None,
    };

    let mut csv = Csv::new("line", &params);
    match &gaps {
        None => {
            csv.header("x,gamma_p,rate_noic,rate_oic,regime");
            for r in &rows {
                csv.row(&[
                    sig(r.x),
                    sig(r.gamma_p.value()),
                    sig(r.rate_noic.value()),
                    sig(r.rate_oic.value()),
                    r.regime.to_string(),
                ]);
            }
        }
        Some(gaps) => {
            csv.header(
                "x,gamma_p,rate_noic,rate_oic,regime,\
                 required_snr_noic_db,required_snr_oic_db,gap_db,inversion_branch",
            );
            for (r, g) in rows.iter().zip(gaps) {
                csv.row(&[
                    sig(r.x),
                    sig(r.gamma_p.value()),
                    sig(r.rate_noic.value()),
                    sig(r.rate_oic.value()),
                    r.regime.to_string(),
                    sig(g.required_noic_db),
                    sig(g.required_oic_db),
                    sig(g.gap_db),
                    g.branch.to_string(),
                ]);
            }
        }
    }
    Ok(csv.finish())
}

/// `power-gap`: required-power difference for a target rate, versus distance.
pub fn power_gap(
    target_rate: f64,
    beta_p: LinearSnr,
    v: f64,
    x_min: f64,
    x_max: f64,
    points: usize,
) -> Result<String, CliError> {
    let grid = x_grid(x_min, x_max, points)?;
    let target = Rate::new(target_rate).map_err(usage)?;
    let rows = power_gap_curve(target, beta_p, v, &grid).map_err(usage)?;

    let mut csv = Csv::new(
        "power-gap",
        &[
            ("target_rate", sig(target_rate)),
            ("beta_p_linear", sig(beta_p.value())),
            ("v", sig(v)),
            ("x_min", sig(x_min)),
            ("x_max", sig(x_max)),
            ("points", points.to_string()),
        ],
    );
    csv.header("x,gamma_p,required_snr_noic_db,required_snr_oic_db,gap_db,inversion_branch");
    for r in &rows {
        csv.row(&[
            sig(r.x),
            sig(r.gamma_p.value()),
            sig(r.required_noic_db),
            sig(r.required_oic_db),
            sig(r.gap_db),
            r.branch.to_string(),
        ]);
    }
    Ok(csv.finish())
}

/// `mc`: the Monte-Carlo study from a config file. The thread count affects
/// scheduling only, never the numbers, and is deliberately not echoed into
/// the output.
pub fn mc(config_file: &Path, threads: Option<usize>) -> Result<String, CliError> {
    let cfg = load_mc_config(config_file)?;
    let table = match threads {
        Some(n) if n > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::internal(format!("cannot build thread pool: {e}")))?;
            pool.install(|| mc_run(&cfg))
        }
        _ => mc_run(&cfg),
    }
    .map_err(usage)?;

    let mean_beta_echo = match cfg.mean_beta_p {
        MeanBetaP::Exponential(m) => sig(m.value()),
        MeanBetaP::NeverDecodable => "inf".to_string(),
    };
    let grid_echo = cfg
        .energy_grid
        .iter()
        .map(|e| sig(e.value()))
        .collect::<Vec<_>>()
        .join(",");
    let mut csv = Csv::new(
        "mc",
        &[
            ("channels", cfg.channels.to_string()),
            ("mean_gamma_p_linear", sig(cfg.mean_gamma_p.value())),
            ("mean_beta_p_linear", mean_beta_echo),
            ("iterations", cfg.iterations.to_string()),
            ("energy_grid", grid_echo),
            ("seed", cfg.seed.to_string()),
        ],
    );
    csv.header(
        "energy,avg_snr_per_channel,avg_sum_rate_oic,avg_sum_rate_noic,\
         avg_rel_diff_paper,avg_rel_diff_companion",
    );
    for row in &table {
        csv.row(&[
            sig(row.energy.value()),
            sig(row.avg_snr_per_channel),
            sig(row.avg_sum_rate_oic),
            sig(row.avg_sum_rate_noic),
            sig(row.avg_rel_diff_paper),
            sig(row.avg_rel_diff_companion),
        ]);
    }
    Ok(csv.finish())
}
