//! PSNR, disparity bad-pixel rate and seeded Gaussian noise.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::image::{Image8, ImagePlane};

/// Reported PSNR for identical images.
pub const PSNR_CAP: f64 = 99.0;

fn check_shape(a: &Image8, b: &Image8) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch { left: a.dims(), right: b.dims() });
    }
    if a.channels() != b.channels() {
        return Err(Error::invalid(format!(
            "channel count differs: {} vs {}",
            a.channels(),
            b.channels()
        )));
    }
    Ok(())
}

/// `10·log10(255² / MSE)`, capped at [`PSNR_CAP`].
pub fn psnr(a: &Image8, b: &Image8) -> Result<f64> {
    check_shape(a, b)?;
    let sse: f64 = a
        .data()
        .iter()
        .zip(b.data())
        .map(|(&x, &y)| {
            let d = f64::from(x) - f64::from(y);
            d * d
        })
        .sum();
    if sse == 0.0 {
        return Ok(PSNR_CAP);
    }
    let mse = sse / a.data().len() as f64;
    Ok((10.0 * (255.0 * 255.0 / mse).log10()).min(PSNR_CAP))
}

/// Fraction of pixels whose absolute error exceeds `threshold` levels.
pub fn bad_pixel_rate(est: &Image8, gt: &Image8, threshold: f64) -> Result<f64> {
    check_shape(est, gt)?;
    let bad = est
        .data()
        .iter()
        .zip(gt.data())
        .filter(|(&e, &g)| (f64::from(e) - f64::from(g)).abs() > threshold)
        .count();
    Ok(bad as f64 / est.data().len() as f64)
}

/// Additive Gaussian noise in normalized units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec {
    pub sigma: f64,
    pub seed: u64,
}

/// Adds `N(0, σ²)` to every pixel and clamps to `[0, 1]`.
///
/// Each pixel draws from its own ChaCha8 stream: the key comes from
/// `seed_from_u64(seed)` and the stream id is the row-major pixel index, so the
/// output depends only on `(seed, dimensions)` and not on evaluation order.
/// The normal variate is `rand_distr::StandardNormal` (ziggurat).
pub fn add_gaussian_noise(src: &ImagePlane, spec: &NoiseSpec) -> Result<ImagePlane> {
    if !(spec.sigma >= 0.0) {
        return Err(Error::invalid(format!("noise sigma must be >= 0, got {}", spec.sigma)));
    }
    if spec.sigma == 0.0 {
        return Ok(src.clone());
    }
    let base = ChaCha8Rng::seed_from_u64(spec.seed);
    let data = src
        .data()
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut rng = base.clone();
            rng.set_stream(i as u64);
            rng.set_word_pos(0);
            let z: f64 = StandardNormal.sample(&mut rng);
            (v + spec.sigma * z).clamp(0.0, 1.0)
        })
        .collect();
    ImagePlane::new(src.width(), src.height(), data)
}
