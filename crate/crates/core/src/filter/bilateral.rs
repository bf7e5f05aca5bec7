use rayon::prelude::*;

use super::gaussian::gaussian_radius;
use crate::error::Result;
use crate::image::ImagePlane;

/// Joint bilateral filter: spatial Gaussian on pixel distance times range
/// Gaussian on guide differences, summed directly over a `⌈3σ_s⌉` window and
/// normalized by the total weight. `guide == src` is the classic bilateral.
pub fn bilateral_filter(
    src: &ImagePlane,
    guide: &ImagePlane,
    sigma_s: f64,
    sigma_r: f64,
) -> Result<ImagePlane> {
    let mut out = bilateral_filter_many(std::slice::from_ref(src), guide, sigma_s, sigma_r)?;
    Ok(out.pop().expect("one plane in, one plane out"))
}

/// Filters several planes that share one guide.
///
/// The per-pixel weights depend only on the guide, so they are computed once
/// per tap and applied to every plane. Planes are interleaved pixel-major so
/// the inner accumulation runs over contiguous memory.
pub fn bilateral_filter_many(
    srcs: &[ImagePlane],
    guide: &ImagePlane,
    sigma_s: f64,
    sigma_r: f64,
) -> Result<Vec<ImagePlane>> {
    for s in srcs {
        s.check_same_dims(guide)?;
    }
    let planes = srcs.len();
    if planes == 0 {
        return Ok(Vec::new());
    }
    let (w, h) = guide.dims();
    let radius = gaussian_radius(sigma_s) as isize;
    let side = 2 * radius + 1;
    let inv_2ss = 1.0 / (2.0 * sigma_s * sigma_s);
    let inv_2sr = 1.0 / (2.0 * sigma_r * sigma_r);

    let spatial: Vec<f64> = (0..side * side)
        .map(|i| {
            let dy = i / side - radius;
            let dx = i % side - radius;
            ((dx * dx + dy * dy) as f64) * inv_2ss
        })
        .collect();

    let mut slab = vec![0.0; w * h * planes];
    for (k, s) in srcs.iter().enumerate() {
        for (i, &v) in s.data().iter().enumerate() {
            slab[i * planes + k] = v;
        }
    }

    let g = guide.data();
    let mut out_slab = vec![0.0; w * h * planes];
    out_slab.par_chunks_mut(w * planes).enumerate().for_each(|(y, out_row)| {
        let y = y as isize;
        let mut acc = vec![0.0; planes];
        for x in 0..w as isize {
            let gp = g[y as usize * w + x as usize];
            acc.iter_mut().for_each(|a| *a = 0.0);
            let mut norm = 0.0;
            for qy in (y - radius).max(0)..=(y + radius).min(h as isize - 1) {
                let srow = ((qy - y + radius) * side) as usize;
                for qx in (x - radius).max(0)..=(x + radius).min(w as isize - 1) {
                    let q = qy as usize * w + qx as usize;
                    let d = g[q] - gp;
                    let wgt = (-(spatial[srow + (qx - x + radius) as usize] + d * d * inv_2sr)).exp();
                    norm += wgt;
                    for (a, &c) in acc.iter_mut().zip(&slab[q * planes..(q + 1) * planes]) {
                        *a += wgt * c;
                    }
                }
            }
            let o = &mut out_row[x as usize * planes..(x as usize + 1) * planes];
            for (o, a) in o.iter_mut().zip(&acc) {
                *o = a / norm;
            }
        }
    });

    Ok((0..planes)
        .map(|k| {
            let data = out_slab.iter().skip(k).step_by(planes).copied().collect();
            ImagePlane::new(w, h, data).expect("dimensions preserved")
        })
        .collect())
}
