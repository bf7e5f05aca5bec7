// Median and mode filtering as M-smoothers driven by a box filter.
//
// L1 loss + box weights is exactly the (lower) median filter. A redescending
// loss with a small scale turns the same machinery into a mode filter.
//
//     cargo run --release --example histogram_filters

use msmooth::oracle::{brute_median, brute_mode};
use msmooth::{quantize, smooth_exact, synth, FilterKind, FilterSpec, LossKind, Sampling, SmootherConfig};

pub struct HistogramReport {
    pub median_agreement: f64,
    pub mode_agreement: f64,
}

fn agreement(a: &msmooth::Image8, b: &msmooth::Image8) -> f64 {
    let same = a.data().iter().zip(b.data()).filter(|(x, y)| x == y).count();
    same as f64 / a.data().len() as f64
}

pub fn run_example() -> msmooth::Result<HistogramReport> {
    // Few distinct levels so that window modes are well defined.
    let noise = synth::random_image8(48, 48, 1, 3);
    let img = msmooth::Image8::gray(48, 48, noise.data().iter().map(|v| (v / 32) * 32).collect())?;
    let src = msmooth::normalize(&img, 0)?;
    let r = 2;
    let sigma_s = (r as f64 + 0.5) / 2f64.sqrt();

    let median_cfg = SmootherConfig::new(FilterSpec::new(FilterKind::Box, sigma_s, 0.1)?, LossKind::L1, Sampling::Exact)?;
    let median = quantize(&smooth_exact(&src, &median_cfg, None)?);
    let median_agreement = agreement(&median, &brute_median(&img, r)?);

    // A scale below the level spacing makes each level its own basin.
    let mode_cfg =
        SmootherConfig::new(FilterSpec::new(FilterKind::Box, sigma_s, 0.01)?, LossKind::TruncatedL1, Sampling::Exact)?;
    let mode = quantize(&smooth_exact(&src, &mode_cfg, None)?);
    let mode_agreement = agreement(&mode, &brute_mode(&img, r)?);

    println!("box radius {r}");
    println!("  L1 + box vs sorted-window median:        {:6.2}% of pixels equal", 100.0 * median_agreement);
    println!("  truncated L1 + box vs histogram mode:    {:6.2}% of pixels equal", 100.0 * mode_agreement);
    Ok(HistogramReport { median_agreement, mode_agreement })
}

#[allow(dead_code)]
fn main() -> msmooth::Result<()> {
    run_example().map(|_| ())
}
