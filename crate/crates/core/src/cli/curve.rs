use std::io::Write;
use std::path::PathBuf;

use clap::Args;

use super::{list_images, parse_filter, parse_loss, CliError, CliResult};
use crate::filter::{FilterKind, FilterSpec};
use crate::image::{normalize, quantize, read_pnm_file, to_luminance, ImagePlane};
use crate::loss::LossKind;
use crate::metrics::psnr;
use crate::smoother::{smooth_approx, smooth_exact, Sampling, SmootherConfig};

pub const CURVE_HEADER: &str = "loss,filter,sigma_r,n,mean_psnr";

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    /// Directory of .pgm/.ppm test images; color images are converted to luminance.
    #[arg(long)]
    pub dir: PathBuf,
    #[command(flatten)]
    pub grid: CurveGrid,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct CurveGrid {
    #[arg(long, value_delimiter = ',', value_parser = parse_loss,
          default_values_t = LossKind::ALL.to_vec())]
    pub losses: Vec<LossKind>,
    #[arg(long, value_delimiter = ',', value_parser = parse_filter,
          default_values_t = FilterKind::ALL.to_vec())]
    pub filters: Vec<FilterKind>,
    #[arg(long = "sigma-s", value_delimiter = ',', default_values_t = [2.0, 4.0, 8.0, 16.0])]
    pub sigma_s: Vec<f64>,
    #[arg(long = "sigma-r", value_delimiter = ',', default_values_t = [0.05, 0.1, 0.2, 0.4])]
    pub sigma_r: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = [8, 16, 32, 64, 128])]
    pub samples: Vec<usize>,
}

impl Default for CurveGrid {
    fn default() -> Self {
        Self {
            losses: LossKind::ALL.to_vec(),
            filters: FilterKind::ALL.to_vec(),
            sigma_s: vec![2.0, 4.0, 8.0, 16.0],
            sigma_r: vec![0.05, 0.1, 0.2, 0.4],
            samples: vec![8, 16, 32, 64, 128],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveRow {
    pub loss: LossKind,
    pub filter: FilterKind,
    pub sigma_r: f64,
    pub n: usize,
    pub mean_psnr: f64,
}

/// One row per (loss, filter, σ_r, n), averaging PSNR(approx, exact) over
/// every image and σ_s. Both sides are quantized to 8 bits; the exact result
/// is computed once per (image, σ_s) and shared across `n`.
pub fn curve_rows(images: &[ImagePlane], grid: &CurveGrid) -> crate::Result<Vec<CurveRow>> {
    if images.is_empty() {
        return Err(crate::Error::invalid("no test images"));
    }
    if grid.sigma_s.is_empty() {
        return Err(crate::Error::invalid("empty sigma-s list"));
    }
    let mut rows = Vec::new();
    for &loss in &grid.losses {
        for &filter in &grid.filters {
            for &sigma_r in &grid.sigma_r {
                let mut sums = vec![0.0; grid.samples.len()];
                for img in images {
                    for &sigma_s in &grid.sigma_s {
                        let spec = FilterSpec::new(filter, sigma_s, sigma_r)?;
                        let exact_cfg = SmootherConfig::new(spec, loss, Sampling::Exact)?;
                        let exact = quantize(&smooth_exact(img, &exact_cfg, None)?);
                        for (sum, &n) in sums.iter_mut().zip(&grid.samples) {
                            let cfg = SmootherConfig::new(spec, loss, Sampling::Uniform(n))?;
                            *sum += psnr(&quantize(&smooth_approx(img, &cfg, None)?), &exact)?;
                        }
                    }
                }
                let count = (images.len() * grid.sigma_s.len()) as f64;
                rows.extend(grid.samples.iter().zip(sums).map(|(&n, sum)| CurveRow {
                    loss,
                    filter,
                    sigma_r,
                    n,
                    mean_psnr: sum / count,
                }));
            }
        }
    }
    Ok(rows)
}

pub(super) fn cmd_curve(args: &CurveArgs, out: &mut dyn Write) -> CliResult<()> {
    let files = list_images(&args.dir)?;
    if files.is_empty() {
        return Err(CliError::Usage(format!("no .pgm/.ppm images in {}", args.dir.display())));
    }
    let images = files
        .iter()
        .map(|p| {
            let img = read_pnm_file(p)?;
            if img.channels() == 3 {
                normalize(&quantize(&to_luminance(&img)?), 0)
            } else {
                normalize(&img, 0)
            }
        })
        .collect::<crate::Result<Vec<_>>>()?;
    let rows = curve_rows(&images, &args.grid)?;
    writeln!(out, "{CURVE_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{},{:.2}", r.loss, r.filter, r.sigma_r, r.n, r.mean_psnr)?;
    }
    Ok(())
}
