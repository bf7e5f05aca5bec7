//! The `msmooth` command line.
//!
//! [`run`] parses arguments, dispatches a subcommand and returns the process
//! exit code: 0 on success, 1 for usage, configuration and I/O errors, 2 when
//! two images disagree in shape.

mod bench;
mod curve;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::filter::{FilterKind, FilterSpec};
use crate::image::{normalize, quantize, read_pnm_file, write_pnm_file, Image8};
use crate::loss::LossKind;
use crate::metrics::{add_gaussian_noise, bad_pixel_rate, psnr, NoiseSpec};
use crate::smoother::{smooth, smooth_multichannel_with, Sampling, SmootherConfig};

pub use bench::{bench_rows, BenchArgs, BenchRow, BENCH_HEADER};
pub use curve::{curve_rows, CurveArgs, CurveGrid, CurveRow, CURVE_HEADER};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) if e.is_shape_error() => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "msmooth", version, about = "Robust piecewise-constant image smoothing")]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smooth a PGM/PPM image.
    Smooth(SmoothArgs),
    /// PSNR between two images, in dB.
    Psnr { a: PathBuf, b: PathBuf },
    /// Percentage of pixels whose error exceeds the threshold.
    Badpix {
        #[arg(long, default_value_t = 1.0)]
        threshold: f64,
        est: PathBuf,
        gt: PathBuf,
    },
    /// Add seeded Gaussian noise (sigma in [0,1] intensity units).
    Noise {
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Timing table on a synthetic image, as CSV.
    Bench(bench::BenchArgs),
    /// Mean PSNR of the approximation against the exact engine, as CSV.
    Curve(curve::CurveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Approx,
    Exact,
    Oracle,
}

#[derive(Debug, Args)]
struct SmoothArgs {
    #[arg(long, default_value = "box", value_parser = parse_filter)]
    filter: FilterKind,
    #[arg(long, default_value = "tl1", value_parser = parse_loss)]
    loss: LossKind,
    #[arg(long, default_value_t = 4.0)]
    sigma_s: f64,
    #[arg(long, default_value_t = 0.1)]
    sigma_r: f64,
    #[arg(long, default_value_t = 16)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Engine::Approx)]
    engine: Engine,
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
    /// Guidance image for bilateral/guided weights.
    #[arg(long, conflicts_with = "self_guide")]
    guide: Option<PathBuf>,
    /// Let bilateral/guided weights follow the input itself.
    #[arg(long)]
    self_guide: bool,
}

fn parse_filter(s: &str) -> Result<FilterKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_loss(s: &str) -> Result<LossKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut buf)),
            Err(e) => Err(CliError::Usage(format!("cannot start thread pool: {e}"))),
        },
        None => dispatch(cli.command, &mut buf),
    };
    let result = result.and_then(|()| Ok(out.write_all(&buf)?));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Smooth(args) => cmd_smooth(&args, out),
        Command::Psnr { a, b } => {
            let v = psnr(&read_pnm_file(&a)?, &read_pnm_file(&b)?)?;
            writeln!(out, "{v:.2}")?;
            Ok(())
        }
        Command::Badpix { threshold, est, gt } => {
            if !(threshold >= 0.0) {
                return Err(CliError::Usage(format!("threshold must be >= 0, got {threshold}")));
            }
            let rate = bad_pixel_rate(&read_pnm_file(&est)?, &read_pnm_file(&gt)?, threshold)?;
            writeln!(out, "{:.2}", 100.0 * rate)?;
            Ok(())
        }
        Command::Noise { sigma, seed, input, output } => {
            let noisy = noisy_image(&read_pnm_file(&input)?, sigma, seed)?;
            write_pnm_file(&output, &noisy)?;
            Ok(())
        }
        Command::Bench(args) => bench::cmd_bench(&args, out),
        Command::Curve(args) => curve::cmd_curve(&args, out),
    }
}

/// Channel `c` uses seed `seed + c`, so a gray image and the first channel of
/// a color image receive the same noise.
pub fn noisy_image(img: &Image8, sigma: f64, seed: u64) -> crate::Result<Image8> {
    let parts = (0..img.channels())
        .map(|c| {
            let spec = NoiseSpec { sigma, seed: seed.wrapping_add(c as u64) };
            Ok(quantize(&add_gaussian_noise(&normalize(img, c)?, &spec)?))
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Image8::merge_channels(&parts)
}

fn cmd_smooth(args: &SmoothArgs, out: &mut dyn Write) -> CliResult<()> {
    if args.filter.is_edge_aware() && args.guide.is_none() && !args.self_guide {
        return Err(CliError::Usage(format!(
            "--filter {} needs --guide <file> or --self-guide",
            args.filter
        )));
    }
    let sampling = match args.engine {
        Engine::Approx => Sampling::Uniform(args.samples),
        Engine::Exact | Engine::Oracle => Sampling::Exact,
    };
    let filter = FilterSpec::new(args.filter, args.sigma_s, args.sigma_r)?;
    let cfg = SmootherConfig::new(filter, args.loss, sampling)?;

    let input = read_pnm_file(&args.input)?;
    let guide = args.guide.as_deref().map(read_pnm_file).transpose()?;

    let start = Instant::now();
    let result = match args.engine {
        Engine::Approx | Engine::Exact => smooth_multichannel_with(&input, &cfg, guide.as_ref(), smooth)?,
        Engine::Oracle => oracle_smooth(&input, &cfg, guide.as_ref())?,
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    write_pnm_file(&args.output, &result)?;

    let mp = (input.width() * input.height()) as f64 / 1e6;
    let n = match sampling {
        Sampling::Exact => 256,
        Sampling::Uniform(n) => n,
    };
    writeln!(
        out,
        "filter={} loss={} n={} engine={} time_ms={:.1} ms_per_mp={:.1}",
        args.filter,
        args.loss,
        n,
        args.engine.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default(),
        elapsed,
        elapsed / mp
    )?;
    Ok(())
}

#[cfg(feature = "testing")]
fn oracle_smooth(input: &Image8, cfg: &SmootherConfig, guide: Option<&Image8>) -> crate::Result<Image8> {
    use crate::oracle::{brute_msmooth, WeightRule};
    let rule = WeightRule::from_spec(&cfg.filter);
    smooth_multichannel_with(input, cfg, guide, |plane, cfg, g| brute_msmooth(plane, &rule, &cfg.loss, g))
}

#[cfg(not(feature = "testing"))]
fn oracle_smooth(_: &Image8, _: &SmootherConfig, _: Option<&Image8>) -> crate::Result<Image8> {
    Err(Error::invalid("the oracle engine needs the `testing` feature"))
}

/// `.pgm`/`.ppm` files directly inside `dir`, sorted by name.
fn list_images(dir: &Path) -> CliResult<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(Error::from)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && matches!(
                    p.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref(),
                    Some("pgm" | "ppm")
                )
        })
        .collect();
    files.sort();
    Ok(files)
}
