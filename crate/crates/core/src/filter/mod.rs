//! Weighted-average filters: box, Gaussian, bilateral and guided.
//!
//! Every filter is parameterized by the same pair `(σ_s, σ_r)`. Box and guided
//! filters derive their window radius as `max(1, ⌊√2·σ_s⌋)`; the guided filter
//! uses `ε = σ_r²`. Windows are clipped at the image border and weights
//! renormalized over in-bounds pixels.

mod bilateral;
mod boxf;
mod gaussian;
mod guided;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

pub use bilateral::{bilateral_filter, bilateral_filter_many};
pub use boxf::box_filter;
pub use gaussian::{gaussian_filter, gaussian_kernel, gaussian_radius};
pub use guided::{guided_filter, GuidedFilter, GuidedWindowStats};

use crate::error::{Error, Result};
use crate::image::ImagePlane;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterKind {
    Box,
    Gaussian,
    Bilateral,
    Guided,
}

impl FilterKind {
    pub const ALL: [FilterKind; 4] =
        [FilterKind::Box, FilterKind::Gaussian, FilterKind::Bilateral, FilterKind::Guided];

    /// Bilateral and guided filters weight pixels by a guidance image.
    pub fn is_edge_aware(self) -> bool {
        matches!(self, FilterKind::Bilateral | FilterKind::Guided)
    }

    pub fn name(self) -> &'static str {
        match self {
            FilterKind::Box => "box",
            FilterKind::Gaussian => "gaussian",
            FilterKind::Bilateral => "bilateral",
            FilterKind::Guided => "guided",
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FilterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FilterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown filter '{s}'")))
    }
}

/// `max(1, ⌊√2·σ_s⌋)`: box radius giving roughly the smoothing of a Gaussian.
pub fn radius_from_sigma(sigma_s: f64) -> Result<usize> {
    if !(sigma_s > 0.0) || !sigma_s.is_finite() {
        return Err(Error::invalid(format!("sigma_s must be > 0, got {sigma_s}")));
    }
    Ok(((std::f64::consts::SQRT_2 * sigma_s).floor() as usize).max(1))
}

/// A filter choice with its spatial and range parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterSpec {
    kind: FilterKind,
    sigma_s: f64,
    sigma_r: f64,
}

impl FilterSpec {
    pub fn new(kind: FilterKind, sigma_s: f64, sigma_r: f64) -> Result<Self> {
        if !(sigma_s > 0.0) || !sigma_s.is_finite() {
            return Err(Error::invalid(format!("sigma_s must be > 0, got {sigma_s}")));
        }
        if !(sigma_r > 0.0 && sigma_r <= 1.0) {
            return Err(Error::invalid(format!("sigma_r must be in (0, 1], got {sigma_r}")));
        }
        Ok(Self { kind, sigma_s, sigma_r })
    }

    pub fn kind(&self) -> FilterKind {
        self.kind
    }

    pub fn sigma_s(&self) -> f64 {
        self.sigma_s
    }

    pub fn sigma_r(&self) -> f64 {
        self.sigma_r
    }

    pub fn radius(&self) -> usize {
        radius_from_sigma(self.sigma_s).expect("validated in constructor")
    }

    pub fn eps(&self) -> f64 {
        self.sigma_r * self.sigma_r
    }
}

/// Applies `spec` to `src`. Bilateral and guided kinds need `guide`.
pub fn apply(spec: &FilterSpec, src: &ImagePlane, guide: Option<&ImagePlane>) -> Result<ImagePlane> {
    PreparedFilter::new(spec, guide)?.apply(src)
}

/// A filter bound to its guide, ready to be applied to many planes.
#[derive(Debug, Clone)]
pub enum PreparedFilter {
    Box { r: usize },
    Gaussian { sigma_s: f64 },
    Bilateral { guide: ImagePlane, sigma_s: f64, sigma_r: f64 },
    Guided(GuidedFilter),
}

impl PreparedFilter {
    pub fn new(spec: &FilterSpec, guide: Option<&ImagePlane>) -> Result<Self> {
        Ok(match spec.kind {
            FilterKind::Box => PreparedFilter::Box { r: spec.radius() },
            FilterKind::Gaussian => PreparedFilter::Gaussian { sigma_s: spec.sigma_s },
            FilterKind::Bilateral => PreparedFilter::Bilateral {
                guide: guide.ok_or(Error::MissingGuide("bilateral"))?.clone(),
                sigma_s: spec.sigma_s,
                sigma_r: spec.sigma_r,
            },
            FilterKind::Guided => PreparedFilter::Guided(GuidedFilter::new(
                guide.ok_or(Error::MissingGuide("guided"))?,
                spec.radius(),
                spec.eps(),
            )?),
        })
    }

    pub fn apply(&self, src: &ImagePlane) -> Result<ImagePlane> {
        match self {
            PreparedFilter::Box { r } => Ok(box_filter(src, *r)),
            PreparedFilter::Gaussian { sigma_s } => Ok(gaussian_filter(src, *sigma_s)),
            PreparedFilter::Bilateral { guide, sigma_s, sigma_r } => {
                bilateral_filter(src, guide, *sigma_s, *sigma_r)
            }
            PreparedFilter::Guided(gf) => gf.apply(src),
        }
    }

    /// Filters each plane independently; output order matches input order.
    pub fn apply_many(&self, srcs: &[ImagePlane]) -> Result<Vec<ImagePlane>> {
        match self {
            PreparedFilter::Bilateral { guide, sigma_s, sigma_r } => {
                bilateral_filter_many(srcs, guide, *sigma_s, *sigma_r)
            }
            _ => srcs.par_iter().map(|s| self.apply(s)).collect(),
        }
    }
}
