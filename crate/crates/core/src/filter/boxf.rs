use rayon::prelude::*;

use crate::image::ImagePlane;

/// Mean over the `(2r+1)²` window clipped to the image.
///
/// Runs in constant time per pixel: one prefix-sum pass per axis, then each
/// window sum is a difference of two prefix values. The normalizer is the
/// number of in-bounds pixels.
pub fn box_filter(src: &ImagePlane, r: usize) -> ImagePlane {
    let (w, h) = src.dims();
    if w == 0 || h == 0 {
        return src.clone();
    }
    let data = src.data();

    // Horizontal window sums, one row at a time.
    let mut horiz = vec![0.0; w * h];
    horiz
        .par_chunks_mut(w)
        .zip(data.par_chunks(w))
        .for_each_init(
            || vec![0.0; w + 1],
            |prefix, (out, row)| {
                for (i, &v) in row.iter().enumerate() {
                    prefix[i + 1] = prefix[i] + v;
                }
                for (x, o) in out.iter_mut().enumerate() {
                    let lo = x.saturating_sub(r);
                    let hi = (x + r + 1).min(w);
                    *o = prefix[hi] - prefix[lo];
                }
            },
        );

    // Column prefix sums: prefix row y holds the sum of rows [0, y).
    let mut col_prefix = vec![0.0; w * (h + 1)];
    for y in 0..h {
        let (done, rest) = col_prefix.split_at_mut((y + 1) * w);
        let prev = &done[y * w..];
        let next = &mut rest[..w];
        let row = &horiz[y * w..(y + 1) * w];
        for ((n, &p), &v) in next.iter_mut().zip(prev).zip(row) {
            *n = p + v;
        }
    }

    let mut out = vec![0.0; w * h];
    out.par_chunks_mut(w).enumerate().for_each(|(y, out_row)| {
        let lo = y.saturating_sub(r);
        let hi = (y + r + 1).min(h);
        let rows = (hi - lo) as f64;
        let top = &col_prefix[lo * w..(lo + 1) * w];
        let bottom = &col_prefix[hi * w..(hi + 1) * w];
        for (x, o) in out_row.iter_mut().enumerate() {
            let cols = ((x + r + 1).min(w) - x.saturating_sub(r)) as f64;
            *o = (bottom[x] - top[x]) / (rows * cols);
        }
    });
    ImagePlane::new(w, h, out).expect("dimensions preserved")
}
