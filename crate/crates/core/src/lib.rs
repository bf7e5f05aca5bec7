//! Robust piecewise-constant smoothing with a generalized M-smoother.
//!
//! The smoother picks, per pixel, the intensity `θ` minimizing a weighted sum
//! of robust losses `Σ_q ρ(θ − I_q)·w_pq`. Writing that sum as a filtered
//! *cost image* turns it into a series of weighted-average filterings followed
//! by a per-pixel argmin, so any fast filter (box, Gaussian, bilateral,
//! guided) can drive it:
//!
//! * L1 loss + box filter is the median filter.
//! * A redescending loss + box filter behaves like a global mode filter.
//! * Bilateral or guided weights give edge-preserving weighted median/mode
//!   filters, e.g. for depth-map denoising with a color guide.
//!
//! ```
//! use msmooth::{FilterKind, FilterSpec, LossKind, Sampling, SmootherConfig};
//! use msmooth::{smooth_approx, synth::random_plane};
//!
//! let src = random_plane(32, 32, 7);
//! let filter = FilterSpec::new(FilterKind::Box, 2.0, 0.1).unwrap();
//! let cfg = SmootherConfig::new(filter, LossKind::TruncatedL1, Sampling::Uniform(16)).unwrap();
//! let out = smooth_approx(&src, &cfg, None).unwrap();
//! assert_eq!(out.dims(), (32, 32));
//! ```

// `!(x > 0.0)` style checks are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod filter;
pub mod image;
pub mod loss;
pub mod metrics;
#[cfg(feature = "testing")]
pub mod oracle;
pub mod smoother;
pub mod synth;

pub use error::{Error, Result};
pub use filter::{FilterKind, FilterSpec, PreparedFilter};
pub use image::{normalize, quantize, read_pnm, to_luminance, write_pnm, Image8, ImagePlane};
pub use loss::{LossKind, LossSpec};
pub use metrics::{add_gaussian_noise, bad_pixel_rate, psnr, NoiseSpec};
pub use smoother::{
    filtered_cost, parabolic_refine, sample_levels, smooth, smooth_approx, smooth_exact,
    smooth_multichannel, RefinementTriple, SampleSet, Sampling, SmootherConfig,
};
