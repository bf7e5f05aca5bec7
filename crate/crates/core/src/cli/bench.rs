use std::io::Write;
use std::time::Instant;

use clap::Args;

use super::{parse_filter, CliResult};
use crate::filter::FilterKind;
use crate::loss::LossKind;
use crate::smoother::{smooth_approx, Sampling, SmootherConfig};
use crate::synth::random_plane;
use crate::FilterSpec;

pub const BENCH_HEADER: &str = "filter,loss,n,ms_per_mp";

const BOX_SWEEP_RADII: [usize; 3] = [2, 8, 32];
const SAMPLE_SWEEP: [usize; 3] = [8, 16, 32];

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Side length of the square synthetic image.
    #[arg(long, default_value_t = 1024)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Each row reports the fastest of this many runs.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeats: u32,
    /// Filters for the per-filter rows (σ_s=4, σ_r=0.1, n=16).
    #[arg(long, value_delimiter = ',', value_parser = parse_filter,
          default_values_t = FilterKind::ALL.to_vec())]
    pub filters: Vec<FilterKind>,
}

impl Default for BenchArgs {
    fn default() -> Self {
        Self { size: 1024, seed: 0, repeats: 3, filters: FilterKind::ALL.to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    /// Filter name; the box radius sweep uses `box_r<radius>`.
    pub label: String,
    pub loss: LossKind,
    pub n: usize,
    pub ms_per_mp: f64,
}

/// σ_s that maps to box radius `r` under `r = ⌊√2·σ_s⌋`.
fn sigma_for_radius(r: usize) -> f64 {
    (r as f64 + 0.5) / std::f64::consts::SQRT_2
}

/// Rows in order: one per requested filter, the box radius sweep, then the
/// sample-count sweep on the box filter. All rows use truncated L1.
pub fn bench_rows(args: &BenchArgs) -> crate::Result<Vec<BenchRow>> {
    if args.size == 0 {
        return Err(crate::Error::invalid("bench size must be positive"));
    }
    let src = random_plane(args.size, args.size, args.seed);
    let mp = src.len() as f64 / 1e6;
    let loss = LossKind::TruncatedL1;

    let mut plan: Vec<(String, FilterSpec, usize)> = Vec::new();
    for &kind in &args.filters {
        plan.push((kind.to_string(), FilterSpec::new(kind, 4.0, 0.1)?, 16));
    }
    for r in BOX_SWEEP_RADII {
        plan.push((format!("box_r{r}"), FilterSpec::new(FilterKind::Box, sigma_for_radius(r), 0.1)?, 16));
    }
    for n in SAMPLE_SWEEP {
        plan.push((FilterKind::Box.to_string(), FilterSpec::new(FilterKind::Box, 4.0, 0.1)?, n));
    }

    plan.into_iter()
        .map(|(label, filter, n)| {
            let cfg = SmootherConfig::new(filter, loss, Sampling::Uniform(n))?;
            let mut best = f64::INFINITY;
            for _ in 0..args.repeats {
                let start = Instant::now();
                let out = smooth_approx(&src, &cfg, None)?;
                best = best.min(start.elapsed().as_secs_f64() * 1e3);
                drop(out);
            }
            Ok(BenchRow { label, loss, n, ms_per_mp: best / mp })
        })
        .collect()
}

pub(super) fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> CliResult<()> {
    let rows = bench_rows(args)?;
    writeln!(out, "{BENCH_HEADER}")?;
    for row in rows {
        writeln!(out, "{},{},{},{:.1}", row.label, row.loss, row.n, row.ms_per_mp)?;
    }
    Ok(())
}
