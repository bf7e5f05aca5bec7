//! Seeded synthetic inputs: random test images and a piecewise-constant
//! disparity scene with a matching color guide.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::image::{normalize, Image8, ImagePlane};

/// Uniformly random 8-bit samples.
pub fn random_image8(width: usize, height: usize, channels: usize, seed: u64) -> Image8 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..width * height * channels).map(|_| rng.random::<u8>()).collect();
    Image8::new(width, height, channels, data).expect("valid dimensions")
}

/// Normalized plane whose values lie on the 8-bit grid.
pub fn random_plane(width: usize, height: usize, seed: u64) -> ImagePlane {
    normalize(&random_image8(width, height, 1, seed), 0).expect("channel 0 exists")
}

/// Ground-truth disparity and the clean RGB image it belongs to.
#[derive(Debug, Clone)]
pub struct DisparityScene {
    pub disparity: Image8,
    pub guide: Image8,
}

struct Region {
    disparity: u8,
    color: [f64; 3],
    inside: Box<dyn Fn(f64, f64) -> bool>,
}

/// Five fronto-parallel layers: a background, two rectangles, a disk and a
/// triangle. Each layer has a constant disparity and a distinct base color;
/// the color image carries mild shading and per-pixel texture.
pub fn disparity_scene(width: usize, height: usize, seed: u64) -> DisparityScene {
    let (w, h) = (width as f64, height as f64);
    // Later regions occlude earlier ones.
    let regions = [
        Region { disparity: 40, color: [70.0, 110.0, 160.0], inside: Box::new(|_, _| true) },
        Region {
            disparity: 90,
            color: [200.0, 80.0, 60.0],
            inside: Box::new(move |x, y| x > 0.10 * w && x < 0.45 * w && y > 0.15 * h && y < 0.60 * h),
        },
        Region {
            disparity: 140,
            color: [60.0, 170.0, 80.0],
            inside: Box::new(move |x, y| {
                let (dx, dy) = (x - 0.68 * w, y - 0.40 * h);
                dx * dx + dy * dy < (0.22 * h) * (0.22 * h)
            }),
        },
        Region {
            disparity: 190,
            color: [230.0, 210.0, 90.0],
            inside: Box::new(move |x, y| {
                // Triangle with apex at the top.
                let t = (y - 0.55 * h) / (0.35 * h);
                (0.0..=1.0).contains(&t) && (x - 0.35 * w).abs() <= t * 0.20 * w
            }),
        },
        Region {
            disparity: 65,
            color: [120.0, 60.0, 150.0],
            inside: Box::new(move |x, y| x > 0.75 * w && x < 0.95 * w && y > 0.70 * h && y < 0.92 * h),
        },
    ];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disparity = Vec::with_capacity(width * height);
    let mut rgb = Vec::with_capacity(width * height * 3);
    for y in 0..height {
        for x in 0..width {
            let (fx, fy) = (x as f64 + 0.5, y as f64 + 0.5);
            let region = regions.iter().rev().find(|r| (r.inside)(fx, fy)).expect("background covers all");
            disparity.push(region.disparity);
            let shade = 1.0 + 0.08 * ((fx / w) * 6.0).sin() * ((fy / h) * 4.0).cos();
            for c in region.color {
                let texture: f64 = rng.random_range(-6.0..6.0);
                rgb.push((c * shade + texture).round().clamp(0.0, 255.0) as u8);
            }
        }
    }
    DisparityScene {
        disparity: Image8::gray(width, height, disparity).expect("valid dimensions"),
        guide: Image8::new(width, height, 3, rgb).expect("valid dimensions"),
    }
}
