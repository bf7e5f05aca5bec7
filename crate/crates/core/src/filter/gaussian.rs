use rayon::prelude::*;

use crate::image::ImagePlane;

/// Truncation radius used for Gaussian and bilateral windows: `⌈3σ⌉`.
pub fn gaussian_radius(sigma_s: f64) -> usize {
    (3.0 * sigma_s).ceil().max(1.0) as usize
}

/// Unnormalized 1-D taps `exp(-d²/(2σ²))` for `d = -R..=R`.
pub fn gaussian_kernel(sigma_s: f64) -> Vec<f64> {
    let radius = gaussian_radius(sigma_s) as isize;
    let denom = 2.0 * sigma_s * sigma_s;
    (-radius..=radius).map(|d| (-((d * d) as f64) / denom).exp()).collect()
}

/// One normalized 1-D pass over `len` samples spaced `stride` apart.
fn convolve_line(
    src: &[f64],
    start: usize,
    stride: usize,
    len: usize,
    kernel: &[f64],
    out: &mut [f64],
) {
    let radius = kernel.len() / 2;
    for (i, o) in out.iter_mut().enumerate().take(len) {
        let lo = i.saturating_sub(radius);
        let hi = (i + radius + 1).min(len);
        let (mut acc, mut norm) = (0.0, 0.0);
        for j in lo..hi {
            let k = kernel[j + radius - i];
            acc += k * src[start + j * stride];
            norm += k;
        }
        *o = acc / norm;
    }
}

/// Separable Gaussian with spatial scale `sigma_s`, truncated at `⌈3σ⌉` and
/// renormalized by the in-bounds weight sum at every pixel.
///
/// Because the window is a clipped rectangle and the kernel is separable,
/// normalizing each 1-D pass gives the same result as normalizing the 2-D sum.
pub fn gaussian_filter(src: &ImagePlane, sigma_s: f64) -> ImagePlane {
    let (w, h) = src.dims();
    let kernel = gaussian_kernel(sigma_s);
    let data = src.data();

    let mut horiz = vec![0.0; w * h];
    horiz.par_chunks_mut(w.max(1)).enumerate().for_each(|(y, out)| {
        convolve_line(data, y * w, 1, w, &kernel, out);
    });

    // Vertical pass on the transposed problem: each task owns one column.
    let columns: Vec<Vec<f64>> = (0..w)
        .into_par_iter()
        .map(|x| {
            let mut col = vec![0.0; h];
            convolve_line(&horiz, x, w, h, &kernel, &mut col);
            col
        })
        .collect();
    let mut out = vec![0.0; w * h];
    for (x, col) in columns.iter().enumerate() {
        for (y, &v) in col.iter().enumerate() {
            out[y * w + x] = v;
        }
    }
    ImagePlane::new(w, h, out).expect("dimensions preserved")
}
