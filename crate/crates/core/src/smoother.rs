//! The generalized M-smoother solved by cost-volume filtering.
//!
//! For each candidate output level `θ`, the cost image `D(θ) = ρ(θ − I)` is
//! filtered with a weighted-average filter and every pixel keeps the `θ` with
//! the lowest filtered cost. [`smooth_exact`] enumerates all 256 8-bit levels;
//! [`smooth_approx`] visits `n` evenly spaced samples and refines the winner
//! with a parabola through its two neighbours.
//!
//! Cost planes are streamed in fixed-size batches: only a batch of planes and
//! a handful of per-pixel state arrays are alive at any time. Batches are
//! filtered in parallel and folded into the state in ascending `θ` order, so
//! the result does not depend on the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filter::{FilterSpec, PreparedFilter};
use crate::image::{normalize, quantize, to_luminance, Image8, ImagePlane};
use crate::loss::{cost_image, LossKind, LossSpec};

/// Number of levels in the exact 8-bit search.
pub const EIGHT_BIT_LEVELS: usize = 256;

/// Two filtered costs closer than this are treated as equal and the smaller
/// `θ` wins. Filtered costs are O(1); this sits far above accumulated f64
/// rounding and far below genuine gaps between levels.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Denominator magnitude below which parabolic refinement is skipped.
pub const DEGENERATE_CURVATURE: f64 = 1e-12;

/// Upper bound on batch size × pixel count kept in memory while streaming.
const BATCH_BUDGET: usize = 1 << 23;

/// Evenly spaced candidate levels `i / (n − 1)`, endpoints included.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    levels: Vec<f64>,
}

impl SampleSet {
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("need at least 2 samples, got {n}")));
        }
        let denom = (n - 1) as f64;
        Ok(Self { levels: (0..n).map(|i| i as f64 / denom).collect() })
    }

    /// `{0, 1/255, …, 1}`.
    pub fn eight_bit() -> Self {
        Self::uniform(EIGHT_BIT_LEVELS).expect("256 >= 2")
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

pub fn sample_levels(n: usize) -> Result<SampleSet> {
    SampleSet::uniform(n)
}

/// Three equally spaced levels around a sample argmin and their filtered costs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinementTriple {
    pub theta_minus: f64,
    pub theta_zero: f64,
    pub theta_plus: f64,
    pub f_minus: f64,
    pub f_zero: f64,
    pub f_plus: f64,
}

/// Vertex of the parabola through the triple, clamped to `[θ₋, θ₊]`.
pub fn parabolic_refine(t: &RefinementTriple) -> f64 {
    let denom = 4.0 * (t.f_plus + t.f_minus - 2.0 * t.f_zero);
    if denom.abs() < DEGENERATE_CURVATURE {
        return t.theta_zero;
    }
    let shift = (t.theta_plus - t.theta_minus) * (t.f_plus - t.f_minus) / denom;
    (t.theta_zero - shift).clamp(t.theta_minus, t.theta_plus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampling {
    /// All 256 8-bit levels, no refinement.
    Exact,
    /// `n` evenly spaced samples with parabolic refinement.
    Uniform(usize),
}

/// Filter, loss and sampling of one smoother run. The loss scale always equals
/// the filter's range parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmootherConfig {
    pub filter: FilterSpec,
    pub loss: LossSpec,
    pub sampling: Sampling,
}

impl SmootherConfig {
    pub fn new(filter: FilterSpec, loss: LossKind, sampling: Sampling) -> Result<Self> {
        if let Sampling::Uniform(n) = sampling {
            if n < 2 {
                return Err(Error::invalid(format!("need at least 2 samples, got {n}")));
            }
        }
        Ok(Self { filter, loss: LossSpec::new(loss, filter.sigma_r())?, sampling })
    }
}

fn prepare(cfg: &SmootherConfig, src: &ImagePlane, guide: Option<&ImagePlane>) -> Result<PreparedFilter> {
    if let Some(g) = guide {
        src.check_same_dims(g)?;
    }
    // Edge-aware filters fall back to self-guidance.
    let guide = if cfg.filter.kind().is_edge_aware() { Some(guide.unwrap_or(src)) } else { None };
    PreparedFilter::new(&cfg.filter, guide)
}

/// `[F(D(θ))]`: the filtered cost image for a single level.
pub fn filtered_cost(
    src: &ImagePlane,
    theta: f64,
    cfg: &SmootherConfig,
    guide: Option<&ImagePlane>,
) -> Result<ImagePlane> {
    prepare(cfg, src, guide)?.apply(&cost_image(src, theta, &cfg.loss))
}

/// Per-pixel running argmin over levels visited in ascending order, plus the
/// neighbouring costs needed for refinement.
struct ArgminState {
    best: Vec<u32>,
    f_best: Vec<f64>,
    f_below: Vec<f64>,
    f_above: Vec<f64>,
    f_last: Vec<f64>,
}

impl ArgminState {
    fn new(n: usize) -> Self {
        Self {
            best: vec![0; n],
            f_best: vec![f64::INFINITY; n],
            f_below: vec![f64::NAN; n],
            f_above: vec![f64::NAN; n],
            f_last: vec![f64::NAN; n],
        }
    }

    fn fold(&mut self, level: usize, costs: &[f64]) {
        let level = level as u32;
        for (p, &f) in costs.iter().enumerate() {
            if level > 0 && self.best[p] + 1 == level {
                self.f_above[p] = f;
            }
            if f < self.f_best[p] - TIE_TOLERANCE {
                self.best[p] = level;
                self.f_best[p] = f;
                self.f_below[p] = self.f_last[p];
                self.f_above[p] = f64::NAN;
            }
            self.f_last[p] = f;
        }
    }
}

fn run_levels(
    src: &ImagePlane,
    cfg: &SmootherConfig,
    guide: Option<&ImagePlane>,
    samples: &SampleSet,
    refine: bool,
) -> Result<ImagePlane> {
    let filter = prepare(cfg, src, guide)?;
    let levels = samples.levels();
    let npix = src.len();
    let batch = (BATCH_BUDGET / npix.max(1)).clamp(1, 64);

    let mut state = ArgminState::new(npix);
    for (chunk_idx, chunk) in levels.chunks(batch).enumerate() {
        let costs: Vec<ImagePlane> =
            chunk.par_iter().map(|&theta| cost_image(src, theta, &cfg.loss)).collect();
        let filtered = filter.apply_many(&costs)?;
        for (k, plane) in filtered.iter().enumerate() {
            state.fold(chunk_idx * batch + k, plane.data());
        }
    }

    let last = levels.len() - 1;
    let data = (0..npix)
        .map(|p| {
            let i = state.best[p] as usize;
            if !refine || i == 0 || i == last {
                return levels[i];
            }
            parabolic_refine(&RefinementTriple {
                theta_minus: levels[i - 1],
                theta_zero: levels[i],
                theta_plus: levels[i + 1],
                f_minus: state.f_below[p],
                f_zero: state.f_best[p],
                f_plus: state.f_above[p],
            })
        })
        .collect();
    ImagePlane::new(src.width(), src.height(), data)
}

/// Exact smoother over the 8-bit grid: per pixel, the level in
/// `{0, 1/255, …, 1}` with the lowest filtered cost (ties → smallest level).
///
/// Edge-aware filters without a `guide` are self-guided.
pub fn smooth_exact(
    src: &ImagePlane,
    cfg: &SmootherConfig,
    guide: Option<&ImagePlane>,
) -> Result<ImagePlane> {
    run_levels(src, cfg, guide, &SampleSet::eight_bit(), false)
}

/// Sampled smoother: argmin over `n` evenly spaced levels, refined by a
/// parabolic fit when the winner has a neighbour on both sides.
pub fn smooth_approx(
    src: &ImagePlane,
    cfg: &SmootherConfig,
    guide: Option<&ImagePlane>,
) -> Result<ImagePlane> {
    let n = match cfg.sampling {
        Sampling::Uniform(n) => n,
        Sampling::Exact => {
            return Err(Error::invalid("approximate smoothing needs a sample count"));
        }
    };
    run_levels(src, cfg, guide, &SampleSet::uniform(n)?, true)
}

/// Dispatches on `cfg.sampling`.
pub fn smooth(src: &ImagePlane, cfg: &SmootherConfig, guide: Option<&ImagePlane>) -> Result<ImagePlane> {
    match cfg.sampling {
        Sampling::Exact => smooth_exact(src, cfg, guide),
        Sampling::Uniform(_) => smooth_approx(src, cfg, guide),
    }
}

/// Picks the guidance plane for channel `ch` of `img`.
///
/// Color guide for color input: matching channel. Color guide for gray input:
/// luminance. Gray guide: its only channel. No guide: the channel itself.
pub fn guidance_plane(img: &Image8, ch: usize, guide: Option<&Image8>) -> Result<ImagePlane> {
    match guide {
        None => normalize(img, ch),
        Some(g) if g.channels() == 3 && img.channels() == 3 => normalize(g, ch),
        Some(g) if g.channels() == 3 => to_luminance(g),
        Some(g) => normalize(g, 0),
    }
}

/// Smooths each channel independently and quantizes back to 8 bits.
pub fn smooth_multichannel(
    img: &Image8,
    cfg: &SmootherConfig,
    guide: Option<&Image8>,
) -> Result<Image8> {
    smooth_multichannel_with(img, cfg, guide, smooth)
}

/// [`smooth_multichannel`] with a caller-supplied per-plane engine.
pub fn smooth_multichannel_with<F>(
    img: &Image8,
    cfg: &SmootherConfig,
    guide: Option<&Image8>,
    engine: F,
) -> Result<Image8>
where
    F: Fn(&ImagePlane, &SmootherConfig, Option<&ImagePlane>) -> Result<ImagePlane>,
{
    if let Some(g) = guide {
        if g.dims() != img.dims() {
            return Err(Error::DimensionMismatch { left: img.dims(), right: g.dims() });
        }
    }
    let edge_aware = cfg.filter.kind().is_edge_aware();
    let parts = (0..img.channels())
        .map(|ch| {
            let plane = normalize(img, ch)?;
            let guide_plane = if edge_aware { Some(guidance_plane(img, ch, guide)?) } else { None };
            Ok(quantize(&engine(&plane, cfg, guide_plane.as_ref())?))
        })
        .collect::<Result<Vec<_>>>()?;
    Image8::merge_channels(&parts)
}
