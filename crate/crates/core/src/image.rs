//! 8-bit PNM images and normalized floating-point planes.
//!
//! All filtering happens on [`ImagePlane`]s holding intensities in `[0, 1]`
//! (cost planes may leave that range). [`Image8`] is the interchange format:
//! binary PGM (`P5`) or PPM (`P6`) with maxval 255.

use crate::error::{Error, PnmErrorKind, Result};

/// Interleaved 8-bit image with one (gray) or three (RGB) channels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image8 {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<u8>,
}

impl Image8 {
    pub fn new(width: usize, height: usize, channels: usize, data: Vec<u8>) -> Result<Self> {
        if channels != 1 && channels != 3 {
            return Err(Error::invalid(format!("channels must be 1 or 3, got {channels}")));
        }
        if data.len() != width * height * channels {
            return Err(Error::invalid(format!(
                "data length {} does not match {width}x{height}x{channels}",
                data.len()
            )));
        }
        Ok(Self { width, height, channels, data })
    }

    pub fn gray(width: usize, height: usize, data: Vec<u8>) -> Result<Self> {
        Self::new(width, height, 1, data)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u8> {
        self.data
    }

    /// Sample at `(x, y)` of channel `c`.
    pub fn get(&self, x: usize, y: usize, c: usize) -> u8 {
        self.data[(y * self.width + x) * self.channels + c]
    }

    /// Splits an interleaved image into single-channel images.
    pub fn split_channels(&self) -> Vec<Image8> {
        (0..self.channels)
            .map(|c| Image8 {
                width: self.width,
                height: self.height,
                channels: 1,
                data: self.data.iter().skip(c).step_by(self.channels).copied().collect(),
            })
            .collect()
    }

    /// Inverse of [`Image8::split_channels`]. All parts must share dimensions.
    pub fn merge_channels(parts: &[Image8]) -> Result<Image8> {
        let first = parts.first().ok_or_else(|| Error::invalid("no channels to merge"))?;
        for p in parts {
            if p.dims() != first.dims() {
                return Err(Error::DimensionMismatch { left: first.dims(), right: p.dims() });
            }
            if p.channels != 1 {
                return Err(Error::invalid("merge_channels expects single-channel parts"));
            }
        }
        let n = parts.len();
        let mut data = vec![0u8; first.data.len() * n];
        for (c, p) in parts.iter().enumerate() {
            for (i, &v) in p.data.iter().enumerate() {
                data[i * n + c] = v;
            }
        }
        Image8::new(first.width, first.height, n, data)
    }
}

/// Single-channel row-major plane of real values.
#[derive(Debug, Clone, PartialEq)]
pub struct ImagePlane {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl ImagePlane {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::invalid(format!(
                "data length {} does not match {width}x{height}",
                data.len()
            )));
        }
        Ok(Self { width, height, data })
    }

    pub fn constant(width: usize, height: usize, value: f64) -> Self {
        Self { width, height, data: vec![value; width * height] }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self { width, height, data }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> ImagePlane {
        ImagePlane {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pixelwise combination of two planes of equal size.
    pub fn zip_map(&self, other: &ImagePlane, f: impl Fn(f64, f64) -> f64) -> Result<ImagePlane> {
        self.check_same_dims(other)?;
        Ok(ImagePlane {
            width: self.width,
            height: self.height,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn check_same_dims(&self, other: &ImagePlane) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch { left: self.dims(), right: other.dims() });
        }
        Ok(())
    }

    pub fn min_max(&self) -> (f64, f64) {
        self.data
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)))
    }

    pub fn flip_horizontal(&self) -> ImagePlane {
        ImagePlane::from_fn(self.width, self.height, |x, y| self.get(self.width - 1 - x, y))
    }

    pub fn flip_vertical(&self) -> ImagePlane {
        ImagePlane::from_fn(self.width, self.height, |x, y| self.get(x, self.height - 1 - y))
    }
}

// ---------------------------------------------------------------------------
// PNM

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl HeaderCursor<'_> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn read_number(&mut self, what: &'static str) -> Result<u32> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value * 10 + u64::from(b - b'0');
            if value > u64::from(u32::MAX) {
                return Err(Error::pnm(start, PnmErrorKind::MalformedHeader(what)));
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::pnm(start, PnmErrorKind::MalformedHeader(what)));
        }
        Ok(value as u32)
    }
}

/// Parses a binary PGM (`P5`) or PPM (`P6`) file with maxval 255.
pub fn read_pnm(bytes: &[u8]) -> Result<Image8> {
    let channels = match bytes.get(..2) {
        Some(b"P5") => 1,
        Some(b"P6") => 3,
        _ => return Err(Error::pnm(0, PnmErrorKind::BadMagic)),
    };
    let mut cur = HeaderCursor { bytes, pos: 2 };
    match bytes.get(2) {
        Some(b) if b.is_ascii_whitespace() || *b == b'#' => {}
        _ => return Err(Error::pnm(2, PnmErrorKind::MalformedHeader("missing whitespace after magic"))),
    }
    let width = cur.read_number("width")? as usize;
    let height = cur.read_number("height")? as usize;
    let maxval_at = {
        cur.skip_whitespace_and_comments();
        cur.pos
    };
    let maxval = cur.read_number("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::pnm(maxval_at, PnmErrorKind::MalformedHeader("zero image dimension")));
    }
    if maxval != 255 {
        return Err(Error::pnm(maxval_at, PnmErrorKind::UnsupportedMaxval(maxval)));
    }
    // Exactly one whitespace byte separates the header from the raster.
    match bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => {
            return Err(Error::pnm(
                cur.pos,
                PnmErrorKind::MalformedHeader("missing whitespace after maxval"),
            ))
        }
    }
    let expected = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(channels))
        .ok_or_else(|| Error::pnm(cur.pos, PnmErrorKind::MalformedHeader("image too large")))?;
    let body = &bytes[cur.pos..];
    if body.len() < expected {
        return Err(Error::pnm(
            cur.pos + body.len(),
            PnmErrorKind::TruncatedBody { expected, found: body.len() },
        ));
    }
    Image8::new(width, height, channels, body[..expected].to_vec())
}

/// Serializes as `P5`/`P6` with a minimal header (`"P5\n<w> <h>\n255\n"`).
pub fn write_pnm(img: &Image8) -> Vec<u8> {
    let magic = if img.channels == 1 { "P5" } else { "P6" };
    let header = format!("{magic}\n{} {}\n255\n", img.width, img.height);
    let mut out = Vec::with_capacity(header.len() + img.data.len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(&img.data);
    out
}

pub fn read_pnm_file(path: impl AsRef<std::path::Path>) -> Result<Image8> {
    read_pnm(&std::fs::read(path)?)
}

pub fn write_pnm_file(path: impl AsRef<std::path::Path>, img: &Image8) -> Result<()> {
    std::fs::write(path, write_pnm(img))?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Conversions

/// Channel `channel` of `img` scaled to `[0, 1]` (sample / 255).
pub fn normalize(img: &Image8, channel: usize) -> Result<ImagePlane> {
    if channel >= img.channels {
        return Err(Error::ChannelOutOfRange { channel, channels: img.channels });
    }
    let data = img
        .data
        .iter()
        .skip(channel)
        .step_by(img.channels)
        .map(|&v| f64::from(v) / 255.0)
        .collect();
    ImagePlane::new(img.width, img.height, data)
}

/// Back to 8 bits: `round(v * 255)` half away from zero, clamped to `[0, 255]`.
pub fn quantize(plane: &ImagePlane) -> Image8 {
    let data = plane.data.iter().map(|&v| quantize_value(v)).collect();
    Image8 { width: plane.width, height: plane.height, channels: 1, data }
}

#[inline]
pub fn quantize_value(v: f64) -> u8 {
    // f64::round rounds half away from zero; NaN saturates to 0 in the cast.
    (v * 255.0).round().clamp(0.0, 255.0) as u8
}

/// Rec.601 luma of an RGB image, normalized to `[0, 1]`.
pub fn to_luminance(img: &Image8) -> Result<ImagePlane> {
    if img.channels != 3 {
        return Err(Error::invalid(format!(
            "luminance needs a 3-channel image, got {}",
            img.channels
        )));
    }
    let data = img
        .data
        .chunks_exact(3)
        .map(|px| {
            (0.299 * f64::from(px[0]) + 0.587 * f64::from(px[1]) + 0.114 * f64::from(px[2]))
                / 255.0
        })
        .collect();
    ImagePlane::new(img.width, img.height, data)
}
