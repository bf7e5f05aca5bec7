//! Slow reference implementations.
//!
//! Everything here evaluates definitions literally: sorted windows, explicit
//! histograms, per-pixel weight lists and a direct scan over all 256 levels.
//! Nothing in this module calls into [`crate::filter`] or
//! [`crate::smoother`], so it can serve as an independent check on both.

use crate::error::{Error, Result};
use crate::filter::{gaussian_radius, FilterKind, FilterSpec};
use crate::image::{Image8, ImagePlane};
use crate::loss::LossSpec;
use crate::smoother::TIE_TOLERANCE;

fn check_gray(img: &Image8) -> Result<()> {
    if img.channels() != 1 {
        return Err(Error::invalid("oracle expects a single-channel image"));
    }
    Ok(())
}

fn window(
    x: usize,
    y: usize,
    r: usize,
    w: usize,
    h: usize,
) -> impl Iterator<Item = (usize, usize)> {
    let xs = x.saturating_sub(r)..(x + r + 1).min(w);
    (y.saturating_sub(r)..(y + r + 1).min(h)).flat_map(move |qy| xs.clone().map(move |qx| (qx, qy)))
}

/// Lower median (index `⌊(k−1)/2⌋` of the sorted clipped window).
pub fn brute_median(img: &Image8, r: usize) -> Result<Image8> {
    check_gray(img)?;
    let (w, h) = img.dims();
    let mut data = Vec::with_capacity(w * h);
    let mut buf = Vec::new();
    for y in 0..h {
        for x in 0..w {
            buf.clear();
            buf.extend(window(x, y, r, w, h).map(|(qx, qy)| img.get(qx, qy, 0)));
            buf.sort_unstable();
            data.push(buf[(buf.len() - 1) / 2]);
        }
    }
    Image8::gray(w, h, data)
}

/// Most frequent value in the clipped window; frequency ties go to the
/// smallest value.
pub fn brute_mode(img: &Image8, r: usize) -> Result<Image8> {
    check_gray(img)?;
    let (w, h) = img.dims();
    let mut data = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let mut hist = [0u32; 256];
            for (qx, qy) in window(x, y, r, w, h) {
                hist[usize::from(img.get(qx, qy, 0))] += 1;
            }
            let mut best = 0;
            for v in 1..256 {
                if hist[v] > hist[best] {
                    best = v;
                }
            }
            data.push(best as u8);
        }
    }
    Image8::gray(w, h, data)
}

/// Per-pixel weight rule of a weighted-average filter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightRule {
    Box { r: usize },
    Gaussian { sigma_s: f64 },
    Bilateral { sigma_s: f64, sigma_r: f64 },
    Guided { r: usize, eps: f64 },
}

impl WeightRule {
    pub fn from_spec(spec: &FilterSpec) -> Self {
        match spec.kind() {
            FilterKind::Box => WeightRule::Box { r: spec.radius() },
            FilterKind::Gaussian => WeightRule::Gaussian { sigma_s: spec.sigma_s() },
            FilterKind::Bilateral => {
                WeightRule::Bilateral { sigma_s: spec.sigma_s(), sigma_r: spec.sigma_r() }
            }
            FilterKind::Guided => WeightRule::Guided { r: spec.radius(), eps: spec.eps() },
        }
    }
}

/// Explicit weights `w_pq` for every pixel `p`, normalized to sum to one.
struct WeightTable {
    rows: Vec<Vec<(usize, f64)>>,
}

impl WeightTable {
    fn build(rule: &WeightRule, w: usize, h: usize, guide: &ImagePlane) -> Self {
        let gauss = |d2: f64, s: f64| (-d2 / (2.0 * s * s)).exp();
        let guided_stats = match *rule {
            WeightRule::Guided { r, .. } => Some(window_stats(guide, r)),
            _ => None,
        };
        let mut rows = Vec::with_capacity(w * h);
        for y in 0..h {
            for x in 0..w {
                let mut list: Vec<(usize, f64)> = match *rule {
                    WeightRule::Box { r } => {
                        window(x, y, r, w, h).map(|(qx, qy)| (qy * w + qx, 1.0)).collect()
                    }
                    WeightRule::Gaussian { sigma_s } => window(x, y, gaussian_radius(sigma_s), w, h)
                        .map(|(qx, qy)| {
                            let d2 = dist2(x, y, qx, qy);
                            (qy * w + qx, gauss(d2, sigma_s))
                        })
                        .collect(),
                    WeightRule::Bilateral { sigma_s, sigma_r } => {
                        let tp = guide.get(x, y);
                        window(x, y, gaussian_radius(sigma_s), w, h)
                            .map(|(qx, qy)| {
                                let dt = guide.get(qx, qy) - tp;
                                let wgt = gauss(dist2(x, y, qx, qy), sigma_s) * gauss(dt * dt, sigma_r);
                                (qy * w + qx, wgt)
                            })
                            .collect()
                    }
                    WeightRule::Guided { r, eps } => {
                        guided_weights(x, y, r, eps, guide, guided_stats.as_ref().unwrap())
                    }
                };
                let total: f64 = list.iter().map(|&(_, v)| v).sum();
                for e in &mut list {
                    e.1 /= total;
                }
                rows.push(list);
            }
        }
        Self { rows }
    }
}

fn dist2(x: usize, y: usize, qx: usize, qy: usize) -> f64 {
    let dx = x as f64 - qx as f64;
    let dy = y as f64 - qy as f64;
    dx * dx + dy * dy
}

/// `(count, mean, variance)` of the guide in the clipped window around each pixel,
/// by direct two-pass summation.
fn window_stats(guide: &ImagePlane, r: usize) -> Vec<(f64, f64, f64)> {
    let (w, h) = guide.dims();
    let mut out = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            let vals: Vec<f64> = window(x, y, r, w, h).map(|(qx, qy)| guide.get(qx, qy)).collect();
            let n = vals.len() as f64;
            let mean = vals.iter().sum::<f64>() / n;
            let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
            out.push((n, mean, var));
        }
    }
    out
}

/// Guided-filter weight of every `q` for output pixel `p`:
///
/// `w_pq = 1/N_p · Σ_{k ∈ ω_p ∩ ω_q} 1/N_k · (1 + (T_p − μ_k)(T_q − μ_k) / (σ_k² + ε))`
///
/// where `ω_k` is the clipped radius-`r` window centred on `k` and `N_k` its
/// pixel count. Away from the border every `N` equals `(2r+1)²` and this is
/// the usual `1/|ω|²` form.
fn guided_weights(
    x: usize,
    y: usize,
    r: usize,
    eps: f64,
    guide: &ImagePlane,
    stats: &[(f64, f64, f64)],
) -> Vec<(usize, f64)> {
    let (w, h) = guide.dims();
    let side = 4 * r + 1;
    let mut acc = vec![0.0; side * side];
    let tp = guide.get(x, y);
    let windows: Vec<(usize, usize)> = window(x, y, r, w, h).collect();
    let n_p = windows.len() as f64;
    for &(kx, ky) in &windows {
        let (n_k, mu, var) = stats[ky * w + kx];
        for (qx, qy) in window(kx, ky, r, w, h) {
            let term = 1.0 + (tp - mu) * (guide.get(qx, qy) - mu) / (var + eps);
            let ix = qx + 2 * r - x;
            let iy = qy + 2 * r - y;
            acc[iy * side + ix] += term / (n_k * n_p);
        }
    }
    let mut list = Vec::new();
    for iy in 0..side {
        for ix in 0..side {
            let (qx, qy) = ((x + ix).wrapping_sub(2 * r), (y + iy).wrapping_sub(2 * r));
            if qx < w && qy < h && acc[iy * side + ix] != 0.0 {
                list.push((qy * w + qx, acc[iy * side + ix]));
            }
        }
    }
    list
}

fn resolve_guide<'a>(
    src: &'a ImagePlane,
    guide: Option<&'a ImagePlane>,
) -> Result<&'a ImagePlane> {
    match guide {
        Some(g) => {
            src.check_same_dims(g)?;
            Ok(g)
        }
        // Edge-aware rules fall back to self-guidance; the others ignore it.
        None => Ok(src),
    }
}

/// Literal weighted average `Σ_q w_pq I_q / Σ_q w_pq`.
/// Edge-aware rules without a guide use `src` itself.
pub fn brute_weighted_filter(
    rule: &WeightRule,
    src: &ImagePlane,
    guide: Option<&ImagePlane>,
) -> Result<ImagePlane> {
    let guide = resolve_guide(src, guide)?;
    let (w, h) = src.dims();
    let table = WeightTable::build(rule, w, h, guide);
    let data = table
        .rows
        .iter()
        .map(|row| row.iter().map(|&(q, wgt)| wgt * src.data()[q]).sum())
        .collect();
    ImagePlane::new(w, h, data)
}

/// Direct minimization of `Σ_q ρ(θ − I_q)·w_pq` over `θ ∈ {0, 1/255, …, 1}`,
/// scanning levels upward and keeping the first level that beats the current
/// best by more than the tie tolerance.
pub fn brute_msmooth(
    src: &ImagePlane,
    rule: &WeightRule,
    loss: &LossSpec,
    guide: Option<&ImagePlane>,
) -> Result<ImagePlane> {
    let guide = resolve_guide(src, guide)?;
    let (w, h) = src.dims();
    let table = WeightTable::build(rule, w, h, guide);
    let levels: Vec<f64> = (0..256).map(|i| f64::from(i) / 255.0).collect();

    // cost[level][q], for small images only.
    let npix = src.len();
    let cost: Vec<f64> = levels
        .iter()
        .flat_map(|&t| src.data().iter().map(move |&v| loss.loss(t - v)))
        .collect();

    let data = table
        .rows
        .iter()
        .map(|row| {
            let mut best = 0usize;
            let mut f_best = f64::INFINITY;
            for i in 0..levels.len() {
                let base = &cost[i * npix..(i + 1) * npix];
                let f: f64 = row.iter().map(|&(q, wgt)| wgt * base[q]).sum();
                if f < f_best - TIE_TOLERANCE {
                    best = i;
                    f_best = f;
                }
            }
            levels[best]
        })
        .collect();
    ImagePlane::new(w, h, data)
}
