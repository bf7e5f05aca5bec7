// How many sampled levels the approximate engine needs: PSNR of the
// n-sample result against the 256-level reference on a bundled photo.
//
//     cargo run --release --example approximation_accuracy [image.pgm]

use msmooth::image::read_pnm_file;
use msmooth::{normalize, psnr, quantize, smooth, FilterKind, FilterSpec, ImagePlane, LossKind, Sampling, SmootherConfig};

/// `(n, PSNR)` pairs for truncated L1 + guided weights, σ_s=4, σ_r=0.1.
pub fn run_example() -> msmooth::Result<Vec<(usize, f64)>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/testdata/camera.pgm").to_owned());
    let full = normalize(&read_pnm_file(&path)?, 0)?;
    // A 128x128 crop keeps the example quick.
    let side = 128.min(full.width()).min(full.height());
    let (x0, y0) = ((full.width() - side) / 2, (full.height() - side) / 2);
    let src = ImagePlane::from_fn(side, side, |x, y| full.get(x0 + x, y0 + y));

    let filter = FilterSpec::new(FilterKind::Guided, 4.0, 0.1)?;
    let exact = quantize(&smooth(&src, &SmootherConfig::new(filter, LossKind::TruncatedL1, Sampling::Exact)?, None)?);
    let mut out = Vec::new();
    for n in [4, 8, 16, 32, 64] {
        let cfg = SmootherConfig::new(filter, LossKind::TruncatedL1, Sampling::Uniform(n))?;
        let p = psnr(&quantize(&smooth(&src, &cfg, None)?), &exact)?;
        println!("n = {n:3}: {p:6.2} dB");
        out.push((n, p));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> msmooth::Result<()> {
    run_example().map(|_| ())
}
