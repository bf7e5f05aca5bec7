// The L1 + box cost curve over a window of uniformly spread values, and how
// the three-point parabola recovers its minimum from coarse samples.
//
//     cargo run --example cup_shape

use msmooth::{
    filtered_cost, parabolic_refine, FilterKind, FilterSpec, ImagePlane, LossKind, RefinementTriple, Sampling,
    SmootherConfig,
};

/// Returns `(true minimum, refined estimate)` in 8-bit units.
pub fn run_example() -> msmooth::Result<(f64, f64)> {
    // Window of 81 columns holding levels 90..=170; the center sees them all.
    let (lo, hi) = (90u32, 170u32);
    let n = (hi - lo + 1) as usize;
    let src = ImagePlane::from_fn(n, n, |x, _| f64::from(lo + x as u32) / 255.0);
    let r = (n - 1) / 2;
    let filter = FilterSpec::new(FilterKind::Box, (r as f64 + 0.5) / 2f64.sqrt(), 0.1)?;
    let cfg = SmootherConfig::new(filter, LossKind::L1, Sampling::Exact)?;
    let cost = |level: f64| -> msmooth::Result<f64> { Ok(filtered_cost(&src, level / 255.0, &cfg, None)?.get(r, r)) };

    for level in (40..=220).step_by(20) {
        let c = cost(f64::from(level))?;
        println!("{level:4} {c:8.5} {}", "#".repeat((c * 200.0) as usize));
    }

    let (minus, zero, plus) = (119.0, 136.0, 153.0);
    let triple = RefinementTriple {
        theta_minus: minus / 255.0,
        theta_zero: zero / 255.0,
        theta_plus: plus / 255.0,
        f_minus: cost(minus)?,
        f_zero: cost(zero)?,
        f_plus: cost(plus)?,
    };
    let refined = 255.0 * parabolic_refine(&triple);
    let truth = f64::from(lo + hi) / 2.0;
    println!("minimum {truth}, parabola through ({minus}, {zero}, {plus}) gives {refined:.2}");
    Ok((truth, refined))
}

#[allow(dead_code)]
fn main() -> msmooth::Result<()> {
    run_example().map(|_| ())
}
