use super::box_filter;
use crate::error::{Error, Result};
use crate::image::ImagePlane;

/// Per-window statistics of the single-channel guided filter.
///
/// `mean_t`/`var_t` describe the guide in each radius-`r` window; `a`/`b` are
/// the linear coefficients mapping guide to output in that window.
#[derive(Debug, Clone)]
pub struct GuidedWindowStats {
    pub mean_t: ImagePlane,
    pub var_t: ImagePlane,
    pub a: ImagePlane,
    pub b: ImagePlane,
}

/// Guided filter with the guide statistics computed once.
///
/// Filtering many planes against the same guide costs four box filterings per
/// plane instead of six.
#[derive(Debug, Clone)]
pub struct GuidedFilter {
    guide: ImagePlane,
    r: usize,
    eps: f64,
    mean_t: ImagePlane,
    var_t: ImagePlane,
}

impl GuidedFilter {
    pub fn new(guide: &ImagePlane, r: usize, eps: f64) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("guided filter radius must be >= 1"));
        }
        if !(eps > 0.0) {
            return Err(Error::invalid(format!("guided filter eps must be > 0, got {eps}")));
        }
        let mean_t = box_filter(guide, r);
        let corr_tt = box_filter(&guide.map(|t| t * t), r);
        // var = E[T²] - E[T]², floored at zero against cancellation.
        let var_t = corr_tt.zip_map(&mean_t, |c, m| (c - m * m).max(0.0))?;
        Ok(Self { guide: guide.clone(), r, eps, mean_t, var_t })
    }

    pub fn radius(&self) -> usize {
        self.r
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn coefficients(&self, src: &ImagePlane) -> Result<GuidedWindowStats> {
        src.check_same_dims(&self.guide)?;
        let mean_i = box_filter(src, self.r);
        let corr_it = box_filter(&src.zip_map(&self.guide, |i, t| i * t)?, self.r);
        let n = src.len();
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for k in 0..n {
            let mt = self.mean_t.data()[k];
            let mi = mean_i.data()[k];
            let cov = corr_it.data()[k] - mt * mi;
            let ak = cov / (self.var_t.data()[k] + self.eps);
            a.push(ak);
            b.push(mi - ak * mt);
        }
        let (w, h) = src.dims();
        Ok(GuidedWindowStats {
            mean_t: self.mean_t.clone(),
            var_t: self.var_t.clone(),
            a: ImagePlane::new(w, h, a)?,
            b: ImagePlane::new(w, h, b)?,
        })
    }

    pub fn apply(&self, src: &ImagePlane) -> Result<ImagePlane> {
        let stats = self.coefficients(src)?;
        let mean_a = box_filter(&stats.a, self.r);
        let mean_b = box_filter(&stats.b, self.r);
        let data = mean_a
            .data()
            .iter()
            .zip(mean_b.data())
            .zip(self.guide.data())
            .map(|((&ma, &mb), &t)| ma * t + mb)
            .collect();
        ImagePlane::new(src.width(), src.height(), data)
    }
}

/// Single-channel guided filter built from six box filterings.
pub fn guided_filter(
    src: &ImagePlane,
    guide: &ImagePlane,
    r: usize,
    eps: f64,
) -> Result<ImagePlane> {
    src.check_same_dims(guide)?;
    GuidedFilter::new(guide, r, eps)?.apply(src)
}
