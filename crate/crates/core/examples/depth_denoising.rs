// Denoising a disparity map with a color guide: plain joint bilateral
// averaging against the robust (truncated L1) version of the same weights.
//
//     cargo run --release --example depth_denoising [out_dir]

use msmooth::cli::noisy_image;
use msmooth::image::write_pnm_file;
use msmooth::smoother::smooth_multichannel_with;
use msmooth::{bad_pixel_rate, filter, smooth, synth, FilterKind, FilterSpec, LossKind, Sampling, SmootherConfig};

pub struct DenoiseReport {
    pub noisy: f64,
    pub joint_bilateral: f64,
    pub robust: f64,
}

pub fn run_example() -> msmooth::Result<DenoiseReport> {
    let scene = synth::disparity_scene(160, 120, 4);
    let gt = &scene.disparity;
    let noisy = noisy_image(gt, 0.0177, 1)?;

    let spec = FilterSpec::new(FilterKind::Bilateral, 5.0, 0.1)?;
    let plain_cfg = SmootherConfig::new(spec, LossKind::L1, Sampling::Exact)?;
    let plain = smooth_multichannel_with(&noisy, &plain_cfg, Some(&scene.guide), |p, c, g| filter::apply(&c.filter, p, g))?;
    let robust_cfg = SmootherConfig::new(spec, LossKind::TruncatedL1, Sampling::Uniform(32))?;
    let robust = smooth_multichannel_with(&noisy, &robust_cfg, Some(&scene.guide), smooth)?;

    let report = DenoiseReport {
        noisy: bad_pixel_rate(&noisy, gt, 1.0)?,
        joint_bilateral: bad_pixel_rate(&plain, gt, 1.0)?,
        robust: bad_pixel_rate(&robust, gt, 1.0)?,
    };
    println!("bad pixels (error > 1 level)");
    println!("  noisy input            {:6.2}%", 100.0 * report.noisy);
    println!("  joint bilateral        {:6.2}%", 100.0 * report.joint_bilateral);
    println!("  robust joint bilateral {:6.2}%", 100.0 * report.robust);

    if let Some(dir) = std::env::args().nth(1) {
        let dir = std::path::Path::new(&dir);
        std::fs::create_dir_all(dir)?;
        for (name, img) in [("gt", gt), ("noisy", &noisy), ("jbf", &plain), ("robust", &robust)] {
            write_pnm_file(dir.join(format!("disparity_{name}.pgm")), img)?;
        }
        write_pnm_file(dir.join("guide.ppm"), &scene.guide)?;
    }
    Ok(report)
}

#[allow(dead_code)]
fn main() -> msmooth::Result<()> {
    run_example().map(|_| ())
}
